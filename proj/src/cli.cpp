#include "skein/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "skein/annulus.hpp"
#include "skein/errors.hpp"
#include "skein/mobius.hpp"
#include "skein/projector.hpp"
#include "skein/serialize.hpp"
#include "skein/verify.hpp"

namespace skein::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void scalars(std::ostream& out, const std::string& format, int max_n) {
  const RationalFn d = loop_value();
  if (format == "json") {
    Json doc{{"delta", Json::array()}, {"chebyshev_first", Json::array()}, {"chebyshev_second", Json::array()}, {"varsigma", Json::array()}};
    for (int n = 0; n <= max_n; ++n) {
      doc["delta"].push_back(Json{{"n", n}, {"value", to_json(delta(n))}});
      doc["chebyshev_first"].push_back(Json{{"n", n}, {"poly", to_json(chebyshev(ChebyshevKind::First, n), "d_deg")}});
      doc["chebyshev_second"].push_back(Json{{"n", n}, {"poly", to_json(chebyshev(ChebyshevKind::Second, n), "d_deg")}});
    }
    for (int a = 0; a <= max_n; ++a)
      for (int b = 0; b <= max_n; ++b) doc["varsigma"].push_back(Json{{"a", a}, {"b", b}, {"value", to_json(varsigma(a, b))}});
    emit(out, doc);
    return;
  }
  const bool tex = format == "latex";
  auto poly = [&](const FormalPoly& p) { return tex ? p.latex("d") : p.str("d"); };
  auto lp = [&](const LaurentPoly& p) { return tex ? p.latex() : p.str(); };
  for (int n = 0; n <= max_n; ++n) {
    if (tex) {
      out << "\\Delta_{" << n << "} = " << lp(delta(n)) << "\\\\\n";
      out << "T_{" << n << "}(d) = " << poly(chebyshev(ChebyshevKind::First, n)) << "\\\\\n";
      out << "S_{" << n << "}(d) = " << poly(chebyshev(ChebyshevKind::Second, n)) << "\\\\\n";
    } else {
      out << "Delta_" << n << " = " << lp(delta(n)) << '\n';
      out << "T_" << n << "(d) = " << poly(chebyshev(ChebyshevKind::First, n)) << '\n';
      out << "S_" << n << "(d) = " << poly(chebyshev(ChebyshevKind::Second, n)) << '\n';
    }
  }
  for (int a = 0; a <= max_n; ++a)
    for (int b = 0; b <= max_n; ++b) {
      if (tex)
        out << "\\varsigma(" << a << "," << b << ") = " << lp(varsigma(a, b)) << "\\\\\n";
      else
        out << "varsigma(" << a << "," << b << ") = " << lp(varsigma(a, b)) << '\n';
    }
}

void write_element(std::ostream& out, const std::string& format, const TLElement& x) {
  if (format == "json")
    emit(out, to_json(x));
  else if (format == "latex")
    out << latex(x) << '\n';
  else
    out << x.str() << '\n';
}

void jw(std::ostream& out, const std::string& format, int n, const std::string& method) {
  if (n < 1) throw UsageError("--n must be >= 1");
  write_element(out, format, method == "constructive" ? jones_wenzl_constructive(n) : jones_wenzl(n));
}

struct TraceArgs {
  std::string surface = "disk";
  int n = 1;
  int thru = -1, around = -1, trivial = -1;
};

void trace(std::ostream& out, const std::string& format, TraceArgs a) {
  if (a.n < 0) throw UsageError("--n must be >= 0");
  const TLElement f = a.n == 0 ? TLElement::identity(0) : jones_wenzl(a.n);
  const bool tex = format == "latex";
  if (a.surface == "disk") {
    const RationalFn r = close_disk(f);
    if (format == "json")
      emit(out, to_json(r));
    else
      out << (tex ? r.latex() : r.str()) << '\n';
    return;
  }
  if (a.surface == "annulus") {
    const FormalPoly p = close_annulus(f);
    if (format == "json")
      emit(out, to_json(p, "z_deg"));
    else
      out << (tex ? p.latex("z") : p.str("z")) << '\n';
    return;
  }
  // Unspecified blocks default to 0, except `around`, which takes the rest.
  const int thru = std::max(a.thru, 0), trivial = std::max(a.trivial, 0);
  const int around = a.around >= 0 ? a.around : a.n - thru - trivial;
  if (thru < 0 || around < 0 || trivial < 0 || thru + around + trivial != a.n)
    throw UsageError("--thru, --around and --trivial must be nonnegative and sum to --n");
  const ClosedMbElement c = close_mobius(f, {thru, around, trivial});
  if (format == "json")
    emit(out, to_json(c));
  else
    out << (tex ? c.latex() : c.str()) << '\n';
}

void basis(std::ostream& out, const std::string& format, const std::string& surface, int n, int k) {
  if (n < 0) throw UsageError("--n must be >= 0");
  if (surface == "disk") {
    const auto ms = enumerate_matchings(n);
    if (format == "json") {
      Json list = Json::array();
      for (const auto& m : ms) list.push_back(to_json(m));
      emit(out, Json{{"n", n}, {"count", ms.size()}, {"expected", binomial(2 * n, n) / (n + 1)}, {"matchings", list}});
    } else {
      for (const auto& m : ms) out << (format == "latex" ? latex(m) : m.str()) << '\n';
      out << "count " << ms.size() << '\n';
    }
    return;
  }
  if (n < 1) throw UsageError("--n must be >= 1 for the Mobius band");
  if (k > n) throw UsageError("--k must be at most --n");
  const int lo = k >= 0 ? k : 0, hi = k >= 0 ? k : n;
  Json families = Json::array();
  for (int kk = lo; kk <= hi; ++kk) {
    const auto cs = enumerate_mb_basis(n, kk);
    if (format == "json") {
      Json list = Json::array();
      for (const auto& c : cs) list.push_back(to_json(c));
      families.push_back(Json{{"k", kk}, {"crosscap_intersections", n - kk}, {"count", cs.size()}, {"expected", binomial(2 * n, kk)}, {"connections", list}});
    } else {
      out << "k = " << kk << ": " << cs.size() << " connections\n";
      for (const auto& c : cs) out << "  " << c.str() << '\n';
    }
  }
  if (format == "json") emit(out, Json{{"n", n}, {"families", families}});
}

void encircle_cmd(std::ostream& out, const std::string& format, int a, int b) {
  if (a < 0 || b < 1) throw UsageError("need --a >= 0 and --b >= 1");
  const TLElement x = encircle(a, jones_wenzl(b));
  const LaurentPoly s = varsigma(a, b);
  const bool scalar = x == RationalFn(s) * jones_wenzl(b);
  if (format == "json") {
    emit(out, Json{{"a", a}, {"b", b}, {"varsigma", to_json(s)}, {"is_varsigma_times_projector", scalar}, {"element", to_json(x)}});
  } else if (format == "latex") {
    out << "\\varsigma(" << a << "," << b << ") = " << s.latex() << "\\\\\n" << latex(x) << '\n';
  } else {
    out << "varsigma(" << a << "," << b << ") = " << s.str() << '\n'
        << (scalar ? "encircled projector equals varsigma * f_" : "encircled projector differs from varsigma * f_") << b << '\n';
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::string& default_format) {
  CLI::App app{"Exact Temperley-Lieb, Jones-Wenzl and skein module computations", "skein"};
  app.require_subcommand(1);
  std::string format = default_format.empty() ? "json" : default_format;
  const std::vector<std::string> formats = {"json", "latex", "text"};

  auto* sc = app.add_subcommand("scalars", "Delta_n, T_n, S_n and varsigma up to --max-n");
  int scalars_n = 5;
  sc->add_option("--max-n", scalars_n, "largest index")->check(CLI::Range(0, 40));

  auto* jc = app.add_subcommand("jw", "Jones-Wenzl projector f_n");
  int jw_n = 2;
  std::string method = "wenzl";
  jc->add_option("--n", jw_n, "strand count")->required();
  jc->add_option("--method", method, "wenzl or constructive")->check(CLI::IsMember({"wenzl", "constructive"}));

  auto* tc = app.add_subcommand("trace", "close f_n in the disk, annulus or Mobius band");
  TraceArgs ta;
  tc->add_option("--surface", ta.surface, "disk, annulus or mobius")->check(CLI::IsMember({"disk", "annulus", "mobius"}));
  tc->add_option("--n", ta.n, "strand count")->required();
  tc->add_option("--thru", ta.thru, "strands closed through the crosscap");
  tc->add_option("--around", ta.around, "strands closed around the crosscap");
  tc->add_option("--trivial", ta.trivial, "strands closed in a disk");

  auto* bc = app.add_subcommand("basis", "enumerate basis diagrams");
  std::string basis_surface = "disk";
  int basis_n = 2, basis_k = -1;
  bc->add_option("--surface", basis_surface, "disk or mobius")->check(CLI::IsMember({"disk", "mobius"}));
  bc->add_option("--n", basis_n, "half the number of boundary points")->required();
  bc->add_option("--k", basis_k, "Mobius family: n-k crosscap intersections (all when omitted)");

  auto* ec = app.add_subcommand("encircle", "loop coloured by f_a around f_b");
  int enc_a = 1, enc_b = 1;
  ec->add_option("--a", enc_a, "colour of the encircling loop")->required();
  ec->add_option("--b", enc_b, "colour of the encircled bundle")->required();

  auto* vc = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int max_n = -1;
  std::uint64_t seed = verify::kDefaultSeed;
  bool timings = false;
  vc->add_option("--suite", suite, "suite name")->check(CLI::IsMember(verify::suite_names()));
  vc->add_option("--max-n", max_n, "largest size checked (suite default when omitted)");
  vc->add_option("--seed", seed, "seed for randomized checks");
  vc->add_flag("--timings", timings, "record wall time per check");

  for (auto* sub : {sc, jc, tc, bc, ec, vc}) sub->add_option("--format", format, "json, latex or text")->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const auto* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return 2;
  }

  try {
    if (*sc) scalars(out, format, scalars_n);
    if (*jc) jw(out, format, jw_n, method);
    if (*tc) trace(out, format, ta);
    if (*bc) basis(out, format, basis_surface, basis_n, basis_k);
    if (*ec) encircle_cmd(out, format, enc_a, enc_b);
    if (*vc) {
      if (format == "latex") throw UsageError("verify writes json or text");
      const verify::CheckReport r = verify::run_suite(suite, max_n >= 0 ? max_n : verify::default_max_n(suite), {seed, timings});
      if (format == "json")
        emit(out, verify::to_json(r));
      else
        out << verify::to_text(r);
      if (!r.passed()) {
        err << "verification failed: " << r.failures() << " check(s)\n";
        return 1;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace skein::cli
