#include "skein/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "skein/annulus.hpp"
#include "skein/errors.hpp"
#include "skein/mobius.hpp"
#include "skein/projector.hpp"

namespace skein::verify {

bool CheckReport::passed() const { return failures() == 0; }

int CheckReport::failures() const {
  int f = 0;
  for (const auto& c : checks) f += c.pass ? 0 : 1;
  for (const auto& p : parts) f += p.failures();
  return f;
}

namespace {

struct SuiteInfo {
  int default_n;
  int bound;
};

const std::map<std::string, SuiteInfo>& suites() {
  static const std::map<std::string, SuiteInfo> table = {
      {"tl_relations", {8, 10}},       {"jw_properties", {8, 8}}, {"construction_equiv", {5, 6}},
      {"traces_disk_annulus", {8, 9}}, {"encircling", {3, 4}},    {"mb_module", {8, 8}},
      {"mb_traces", {8, 8}},           {"basis_counts", {8, 10}},
  };
  return table;
}

// FNV-1a, so that digests of long values are stable across builds.
std::string digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string show(const TLElement& x) {
  if (x.size() <= 6) return x.str();
  return "<TL_" + std::to_string(x.left()) + " element, " + std::to_string(x.size()) + " terms, fnv " + digest(x.str()) + ">";
}
std::string show(const MbElement& x) {
  if (x.size() <= 6) return x.str();
  return "<Mb_" + std::to_string(x.n()) + " element, " + std::to_string(x.size()) + " terms, fnv " + digest(x.str()) + ">";
}
std::string show(const RationalFn& x) { return x.str(); }
std::string show(const ClosedMbElement& x) { return x.str(); }
std::string show(const FormalPoly& x) { return x.str("z"); }
std::string show(long v) { return std::to_string(v); }
std::string show(const std::string& s) { return s; }

class Suite {
 public:
  Suite(CheckReport& report, const Options& options) : report_(report), options_(options) {}

  // Run `body`, which returns {lhs, rhs}, and record lhs == rhs.
  template <class F>
  void check(std::string id, Json params, std::string certifies, F&& body) {
    Check c;
    c.id = report_.suite + "/" + std::move(id);
    c.params = std::move(params);
    c.certifies = std::move(certifies);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto [lhs, rhs] = body();
      c.pass = lhs == rhs;
      c.lhs = show(lhs);
      c.rhs = show(rhs);
    } catch (const std::exception& e) {
      c.pass = false;
      c.lhs = std::string("exception: ") + e.what();
    }
    if (options_.timings) c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(c));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  CheckReport& report_;
  const Options& options_;
  std::mt19937_64 rng_{options_.seed};
};

RationalFn dval() { return RationalFn(loop_value()); }
TLElement e(int n, int i) { return TLElement::generator(n, i); }

void tl_relations(Suite& s, int N) {
  for (int n = 2; n <= N; ++n)
    for (int i = 1; i < n; ++i) {
      s.check("square/n=" + std::to_string(n) + "/i=" + std::to_string(i), Json{{"n", n}, {"i", i}}, "e_i e_i = d e_i",
              [&] { return std::pair{e(n, i) * e(n, i), dval() * e(n, i)}; });
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j >= n) continue;
        s.check("braid/n=" + std::to_string(n) + "/i=" + std::to_string(i) + "/j=" + std::to_string(j),
                Json{{"n", n}, {"i", i}, {"j", j}}, "e_i e_j e_i = e_i for |i-j| = 1",
                [&] { return std::pair{e(n, i) * e(n, j) * e(n, i), e(n, i)}; });
      }
      for (int j = i + 2; j < n; ++j)
        s.check("commute/n=" + std::to_string(n) + "/i=" + std::to_string(i) + "/j=" + std::to_string(j),
                Json{{"n", n}, {"i", i}, {"j", j}}, "e_i e_j = e_j e_i for |i-j| >= 2",
                [&] { return std::pair{e(n, i) * e(n, j), e(n, j) * e(n, i)}; });
    }
  if (N >= 4)
    s.check("e3_squared", Json{{"n", 4}}, "e_3 e_3 = d e_3 in TL_4", [] { return std::pair{e(4, 3) * e(4, 3), dval() * e(4, 3)}; });
  for (int n = 1; n <= std::min(N, 6); ++n) {
    const auto basis = enumerate_matchings(n);
    for (int trial = 0; trial < 4; ++trial) {
      const TLElement a(basis[s.rng()() % basis.size()]), b(basis[s.rng()() % basis.size()]), c(basis[s.rng()() % basis.size()]);
      s.check("associativity/n=" + std::to_string(n) + "/trial=" + std::to_string(trial),
              Json{{"n", n}, {"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}}, "(ab)c = a(bc) on basis diagrams",
              [&] { return std::pair{(a * b) * c, a * (b * c)}; });
    }
  }
}

void jw_properties(Suite& s, int N) {
  for (int n = 1; n <= N; ++n) {
    const TLElement& f = jones_wenzl(n);
    const std::string ns = "n=" + std::to_string(n);
    s.check("unit_coefficient/" + ns, Json{{"n", n}}, "f_n - 1 lies in the algebra generated by the e_i",
            [&] { return std::pair{f.coeff(Matching::identity(n)), RationalFn(1)}; });
    s.check("idempotent/" + ns, Json{{"n", n}}, "f_n f_n = f_n", [&] { return std::pair{f * f, f}; });
    for (int i = 1; i < n; ++i) {
      s.check("annihilate_left/" + ns + "/i=" + std::to_string(i), Json{{"n", n}, {"i", i}}, "e_i f_n = 0",
              [&] { return std::pair{e(n, i) * f, TLElement(n, n)}; });
      s.check("annihilate_right/" + ns + "/i=" + std::to_string(i), Json{{"n", n}, {"i", i}}, "f_n e_i = 0",
              [&] { return std::pair{f * e(n, i), TLElement(n, n)}; });
    }
    if (n <= 6)
      for (int m = 1; m <= n; ++m) {
        const std::string ms = ns + "/m=" + std::to_string(m);
        s.check("absorb_top/" + ms, Json{{"n", n}, {"m", m}}, "f_n (f_m on the top m strands) = f_n",
                [&] { return std::pair{f * jones_wenzl(m).with_strands_below(n - m), f}; });
        s.check("absorb_bottom/" + ms, Json{{"n", n}, {"m", m}}, "(f_m on the bottom m strands) f_n = f_n",
                [&] { return std::pair{jones_wenzl(m).with_strands_above(n - m) * f, f}; });
      }
    if (n >= 2)
      s.check("partial_trace/" + ns, Json{{"n", n}}, "closing one strand of f_n gives (Delta_n/Delta_{n-1}) f_{n-1}",
              [&] { return std::pair{partial_trace_top(f), RationalFn(delta(n), delta(n - 1)) * jones_wenzl(n - 1)}; });
  }
}

void construction_equiv(Suite& s, int N) {
  for (int n = 1; n <= N; ++n)
    s.check("constructive_vs_recursive/n=" + std::to_string(n), Json{{"n", n}},
            "the A-symmetrizer sum over S_n equals Wenzl's recursive projector",
            [&] { return std::pair{jones_wenzl_constructive(n), jones_wenzl(n)}; });
}

void traces_disk_annulus(Suite& s, int N) {
  const RationalFn d = dval();
  for (int n = 0; n <= 12; ++n) {
    const std::string ns = "n=" + std::to_string(n);
    s.check("chebyshev_first/" + ns, Json{{"n", n}}, "T_n(d) = (-1)^n (A^{2n} + A^{-2n})", [&] {
      LaurentPoly closed = LaurentPoly::A(2 * n) + LaurentPoly::A(-2 * n);
      if (n % 2) closed = -closed;
      return std::pair{chebyshev(ChebyshevKind::First, n).evaluate(d), RationalFn(closed)};
    });
    s.check("chebyshev_second/" + ns, Json{{"n", n}}, "S_n(d) = Delta_n = (-1)^n A^{-2n} [n+1]",
            [&] { return std::pair{chebyshev(ChebyshevKind::Second, n).evaluate(d), RationalFn(delta(n))}; });
  }
  for (int n = 1; n <= N; ++n) {
    const std::string ns = "n=" + std::to_string(n);
    s.check("disk_trace/" + ns, Json{{"n", n}}, "tr(f_n) = Delta_n", [&] { return std::pair{close_disk(jones_wenzl(n)), RationalFn(delta(n))}; });
    s.check("annular_trace/" + ns, Json{{"n", n}}, "tr_Ann(f_n) = S_n(z)",
            [&] { return std::pair{close_annulus(jones_wenzl(n)), chebyshev(ChebyshevKind::Second, n)}; });
  }
}

void encircling(Suite& s, int N) {
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      s.check("varsigma/a=" + std::to_string(a) + "/b=" + std::to_string(b), Json{{"a", a}, {"b", b}},
              "an f_a-coloured loop around f_b multiplies it by varsigma(a,b)",
              [&] { return std::pair{encircle(a, jones_wenzl(b)), RationalFn(varsigma(a, b)) * jones_wenzl(b)}; });
  const RationalFn d = dval();
  for (int k = 1; k <= N; ++k) {
    RationalFn t = chebyshev(ChebyshevKind::First, k + 1).evaluate(d);
    if (k % 2) t = -t;
    TLElement x = jones_wenzl(k);
    for (int m = 1; m <= N; ++m) {
      x = encircle(1, x);
      s.check("hopf_chain/k=" + std::to_string(k) + "/m=" + std::to_string(m), Json{{"k", k}, {"m", m}},
              "m meridians around f_k close to ((-1)^k T_{k+1}(d))^m Delta_k",
              [&] { return std::pair{close_disk(x), t.pow(m) * RationalFn(delta(k))}; });
    }
  }
}

// Crosscap model, two passes: chords at 0/pi and pi/2/3pi/2.
LoopKind two_pass_loop(const Angle& back) {
  MbLoopDiagram g;
  const int p0 = g.add_node(), p1 = g.add_node(), q0 = g.add_node(), q1 = g.add_node();
  g.add_crosscap_chord(p0, p1);
  g.add_crosscap_chord(q0, q1);
  g.add_arc(p0, q0, Angle(1, 2));
  g.add_arc(q1, p1, back);
  const auto t = g.trace();
  return classify_loop(t.loops.at(0).passes, t.loops.at(0).delta);
}

std::string kind_name(LoopKind k) {
  switch (k) {
    case LoopKind::Trivial:
      return "d";
    case LoopKind::Parallel:
      return "z";
    case LoopKind::OneSided:
      return "x";
  }
  return "?";
}

void mb_module(Suite& s, int N) {
  using Q = mpq_class;
  s.check("crosscap_model/trivial", Json::object(), "a null-homotopic curve through the crosscap twice is d",
          [] { return std::pair{kind_name(two_pass_loop(Angle(-1, 2))), std::string("d")}; });
  s.check("band_model/trivial", Json::object(), "the same curve drawn on the glued square is d", [] {
    std::vector<BandSegment> loop = {{Q(1, 2), Q(3, 10), Q(1), Q(3, 10)},  {Q(0), Q(7, 10), Q(1, 5), Q(7, 10)},
                                     {Q(1, 5), Q(7, 10), Q(1, 5), Q(4, 5)}, {Q(1, 5), Q(4, 5), Q(0), Q(4, 5)},
                                     {Q(1), Q(1, 5), Q(1, 2), Q(1, 5)},    {Q(1, 2), Q(1, 5), Q(1, 2), Q(3, 10)}};
    return std::pair{kind_name(classify_band_loop(loop)), std::string("d")};
  });
  s.check("crosscap_model/parallel", Json::object(), "an essential two-sided curve through the crosscap twice is z",
          [] { return std::pair{kind_name(two_pass_loop(Angle(3, 2))), std::string("z")}; });
  s.check("band_model/parallel", Json::object(), "the same curve drawn on the glued square is z", [] {
    std::vector<BandSegment> loop = {{Q(0), Q(3, 10), Q(1), Q(3, 10)}, {Q(0), Q(7, 10), Q(1), Q(7, 10)}};
    return std::pair{kind_name(classify_band_loop(loop)), std::string("z")};
  });

  for (int n = 2; n <= N; ++n) {
    const MbElement one(MbConnection::identity(n));
    for (int i = 1; i < n; ++i) {
      const std::string id = "n=" + std::to_string(n) + "/i=" + std::to_string(i);
      s.check("generator_through_crosscap/" + id, Json{{"n", n}, {"i", i}}, "e_i 1_Mb = 1_Mb e_{n-i}",
              [&] { return std::pair{act(e(n, i), one), right_act(one, e(n, n - i))}; });
      s.check("generator_intersections/" + id, Json{{"n", n}, {"i", i}}, "e_i 1_Mb meets the crosscap n-2 times", [&] {
        const MbElement r = act(e(n, i), one);
        const long k = r.size() == 1 ? r.terms().begin()->first.crosscap_intersections() : -1;
        return std::pair{k, static_cast<long>(n - 2)};
      });
    }
  }
  for (int n = 1; n <= std::min(N, 6); ++n)
    s.check("slide_projector/n=" + std::to_string(n), Json{{"n", n}}, "f_n slides through the crosscap: f_n 1_Mb = 1_Mb f_n", [&] {
      const MbElement one(MbConnection::identity(n));
      return std::pair{act(jones_wenzl(n), one), right_act(one, jones_wenzl(n))};
    });
  for (int n = 1; n <= std::min(N, 5); ++n) {
    const auto basis = enumerate_matchings(n);
    const MbElement one(MbConnection::identity(n));
    for (int trial = 0; trial < 3; ++trial) {
      const TLElement a(basis[s.rng()() % basis.size()]), b(basis[s.rng()() % basis.size()]), c(basis[s.rng()() % basis.size()]);
      const Json params{{"n", n}, {"a", to_json(a)}, {"b", to_json(b)}, {"c", to_json(c)}};
      const std::string id = "n=" + std::to_string(n) + "/trial=" + std::to_string(trial);
      const MbElement m = act(c, one);
      s.check("module_left/" + id, params, "(ab).m = a.(b.m)", [&] { return std::pair{act(a * b, m), act(a, act(b, m))}; });
      s.check("module_right/" + id, params, "m.(ab) = (m.a).b", [&] { return std::pair{right_act(m, a * b), right_act(right_act(m, a), b)}; });
      s.check("module_unit/" + id, params, "1.m = m", [&] { return std::pair{act(TLElement::identity(n), m), m}; });
    }
  }
}

void mb_traces(Suite& s, int N) {
  const RationalFn d = dval();
  s.check("base/one_through", Json{{"n", 1}}, "tr_Mb1(f_1) = x",
          [] { return std::pair{close_mobius(jones_wenzl(1), {1, 0, 0}), ClosedMbElement::monomial(0, 1)}; });
  if (N >= 2)
    s.check("base/two_through", Json{{"n", 2}}, "tr_Mb2(f_2) = S_1(z) - S_0(z)", [] {
      return std::pair{close_mobius(jones_wenzl(2), {2, 0, 0}), ClosedMbElement::monomial(1, 0) - ClosedMbElement::monomial(0, 0)};
    });
  for (int n = 1; n <= N; ++n) {
    const std::string ns = "n=" + std::to_string(n);
    s.check("around/" + ns, Json{{"n", n}}, "closing f_n around the crosscap gives S_n(z)", [&] {
      return std::pair{close_mobius(jones_wenzl(n), {0, n, 0}), ClosedMbElement::from_z_poly(chebyshev(ChebyshevKind::Second, n))};
    });
    const ClosedMbElement one_thru = close_mobius(jones_wenzl(n), {1, n - 1, 0});
    s.check("one_through_closed_form/" + ns, Json{{"n", n}}, "tr_Mb1(f_n) = x/Delta_{n-1} sum_k (-1)^{n-1+k} S_k(z) Delta_k",
            [&] { return std::pair{one_thru, tr_mb1_closed_form(n)}; });
    s.check("one_through_has_x/" + ns, Json{{"n", n}}, "every term of tr_Mb1(f_n) carries x",
            [&] { return std::pair{static_cast<long>(one_thru.min_x_degree()), 1L}; });
    if (n >= 2) {
      const ClosedMbElement two_thru = close_mobius(jones_wenzl(n), {2, n - 2, 0});
      s.check("two_through_closed_form/" + ns, Json{{"n", n}},
              "tr_Mb2(f_n) = sum_i Delta_{i+1} Delta_i / (Delta_{n-1} Delta_{n-2}) (S_{i+1}(z) - S_i(z))",
              [&] { return std::pair{two_thru, tr_mb2_closed_form(n)}; });
      s.check("two_through_no_x/" + ns, Json{{"n", n}}, "no term of tr_Mb2(f_n) carries x",
              [&] { return std::pair{static_cast<long>(two_thru.max_x_degree()), 0L}; });
      s.check("one_through_recursion/" + ns, Json{{"n", n}},
              "tr_Mb1(f_n) = x S_{n-1}(z) - (Delta_{n-2}/Delta_{n-1}) tr_Mb1(f_{n-1})", [&] {
                const RecursionCheck r = check_mb1_recursion(n);
                return std::pair{r.lhs, r.rhs};
              });
    }
    if (n >= 3)
      s.check("two_through_recursion/" + ns, Json{{"n", n}},
              "tr_Mb2(f_n) = S_{n-1}(z) - S_{n-2}(z) + (Delta_{n-3}/Delta_{n-1}) tr_Mb2(f_{n-1})", [&] {
                const RecursionCheck r = check_mb2_recursion(n);
                return std::pair{r.lhs, r.rhs};
              });
  }
  for (int n = 1; n <= std::min(N, 7); ++n)
    for (int m = 0; n + m <= std::min(N, 7); ++m)
      s.check("mixed_closure/n=" + std::to_string(n) + "/m=" + std::to_string(m), Json{{"n", n}, {"m", m}},
              "closing n strands of f_{n+m} through the crosscap and m trivially gives (Delta_{n+m}/Delta_n) tr(f_n)", [&] {
                return std::pair{close_mobius(jones_wenzl(n + m), {n, 0, m}),
                                 RationalFn(delta(n + m), delta(n)) * close_mobius(jones_wenzl(n), {n, 0, 0})};
              });
  const int H = std::min(N, 3);
  for (int n = 1; n <= H; ++n) {
    RationalFn t = chebyshev(ChebyshevKind::First, n + 1).evaluate(d);
    if (n % 2) t = -t;
    const std::string ns = "n=" + std::to_string(n);
    s.check("hopf_one_through/" + ns, Json{{"n", n}}, "an f_n loop around a strand through the crosscap gives (x/Delta_1)(-1)^n T_{n+1}(d) Delta_n",
            [&] {
              return std::pair{close_mobius(encircle(n, jones_wenzl(1)), {1, 0, 0}),
                               ClosedMbElement::monomial(0, 1, t * RationalFn(delta(n)) / RationalFn(delta(1)))};
            });
    for (int m = 1; m <= H; ++m) {
      const std::string nm = ns + "/m=" + std::to_string(m);
      s.check("hopf_projector/" + nm, Json{{"n", n}, {"m", m}}, "an f_n loop around f_m closed through the crosscap scales it by varsigma(n,m)", [&] {
        return std::pair{close_mobius(encircle(n, jones_wenzl(m)), {m, 0, 0}),
                         RationalFn(varsigma(n, m)) * close_mobius(jones_wenzl(m), {m, 0, 0})};
      });
      s.check("hopf_chain/" + nm, Json{{"n", n}, {"m", m}}, "m meridians around f_n closed through the crosscap scale it by ((-1)^n T_{n+1}(d))^m", [&] {
        TLElement x = jones_wenzl(n);
        for (int k = 0; k < m; ++k) x = encircle(1, x);
        return std::pair{close_mobius(x, {n, 0, 0}), t.pow(m) * close_mobius(jones_wenzl(n), {n, 0, 0})};
      });
    }
  }
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void basis_counts(Suite& s, int N) {
  for (int n = 0; n <= N; ++n)
    s.check("catalan/n=" + std::to_string(n), Json{{"n", n}}, "TL_n has Catalan many diagrams",
            [&] { return std::pair{static_cast<long>(enumerate_matchings(n).size()), binomial(2 * n, n) / (n + 1)}; });
  for (int n = 1; n <= N; ++n)
    for (int k = 0; k <= n; ++k)
      s.check("mobius/n=" + std::to_string(n) + "/k=" + std::to_string(k), Json{{"n", n}, {"k", k}},
              k == n ? "D_n = binom(2n,n) connections missing the crosscap"
                     : "binom(2n,k) connections meeting the crosscap n-k times",
              [&] { return std::pair{static_cast<long>(enumerate_mb_basis(n, k).size()), binomial(2 * n, k)}; });
}

using SuiteFn = void (*)(Suite&, int);

SuiteFn suite_fn(const std::string& name) {
  static const std::map<std::string, SuiteFn> fns = {
      {"tl_relations", tl_relations}, {"jw_properties", jw_properties}, {"construction_equiv", construction_equiv},
      {"traces_disk_annulus", traces_disk_annulus}, {"encircling", encircling}, {"mb_module", mb_module},
      {"mb_traces", mb_traces}, {"basis_counts", basis_counts},
  };
  return fns.at(name);
}

CheckReport run_one(const std::string& name, int max_n, const Options& options) {
  CheckReport r;
  r.suite = name;
  r.max_n = max_n;
  r.seed = options.seed;
  const int bound = suites().at(name).bound;
  if (max_n > bound) {
    r.skipped = true;
    r.skip_reason = "max_n " + std::to_string(max_n) + " exceeds the bound " + std::to_string(bound);
    return r;
  }
  Suite s(r, options);
  try {
    suite_fn(name)(s, max_n);
  } catch (const ResourceLimit& e) {
    r.skipped = true;
    r.skip_reason = e.what();
    r.checks.clear();
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tl_relations", "jw_properties", "construction_equiv", "traces_disk_annulus",
                                                 "encircling",   "mb_module",     "mb_traces",          "basis_counts",
                                                 "all"};
  return names;
}

int default_max_n(const std::string& suite) {
  if (suite == "all") return 8;
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second.default_n;
}

int max_n_bound(const std::string& suite) {
  if (suite == "all") return 10;
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
  return it->second.bound;
}

CheckReport run_suite(const std::string& name, int max_n, const Options& options) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  if (name != "all") {
    if (!suites().count(name)) throw std::invalid_argument("unknown suite: " + name);
    return run_one(name, max_n, options);
  }
  CheckReport r;
  r.suite = "all";
  r.max_n = max_n;
  r.seed = options.seed;
  for (const auto& sub : suite_names()) {
    if (sub == "all") continue;
    r.parts.push_back(run_one(sub, std::min(max_n, suites().at(sub).default_n), options));
  }
  return r;
}

Json to_json(const CheckReport& report) {
  Json out{{"suite", report.suite}, {"max_n", report.max_n}, {"seed", report.seed}, {"passed", report.passed()}};
  if (report.skipped) {
    out["skipped"] = true;
    out["skip_reason"] = report.skip_reason;
  }
  if (report.suite == "all") {
    Json parts = Json::array();
    for (const auto& p : report.parts) parts.push_back(to_json(p));
    out["suites"] = parts;
    return out;
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j{{"id", c.id}, {"params", c.params}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"certifies", c.certifies}};
    if (c.seconds > 0) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  out["checks"] = checks;
  return out;
}

std::string to_text(const CheckReport& report) {
  std::ostringstream os;
  if (report.suite == "all") {
    for (const auto& p : report.parts) os << to_text(p);
    os << "all: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.failures() << " failures, seed " << report.seed << ")\n";
    return os.str();
  }
  if (report.skipped) {
    os << report.suite << ": SKIPPED (" << report.skip_reason << ")\n";
    return os.str();
  }
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (c.seconds > 0) os << " [" << c.seconds << " s]";
    os << '\n';
    if (!c.pass) os << "     lhs: " << c.lhs << "\n     rhs: " << c.rhs << '\n';
  }
  os << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks, "
     << report.failures() << " failures, max_n " << report.max_n << ", seed " << report.seed << ")\n";
  return os.str();
}

}  // namespace skein::verify
