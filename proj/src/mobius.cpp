#include "skein/mobius.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skein/errors.hpp"
#include "skein/projector.hpp"

namespace skein {

// ---------------------------------------------------------------- loops

LoopKind classify_loop(int crosscap_passes, const Angle& displacement) {
  if (crosscap_passes % 2 != 0) {
    if (abs(displacement) != 1) throw InternalError("one-sided loop with displacement " + displacement.get_str());
    return LoopKind::OneSided;
  }
  if (displacement == 0) return LoopKind::Trivial;
  if (abs(displacement) == 2) return LoopKind::Parallel;
  throw InternalError("two-sided loop winding " + displacement.get_str() + " pi around the crosscap");
}

int MbLoopDiagram::add_boundary_node(int label, const Angle& angle) {
  if (label < 1) throw std::invalid_argument("boundary labels start at 1");
  if (!boundary_angle_.emplace(label, angle).second) throw std::invalid_argument("boundary label used twice");
  nodes_.push_back({label, {}});
  return static_cast<int>(nodes_.size()) - 1;
}

int MbLoopDiagram::add_node() {
  nodes_.push_back({0, {}});
  return static_cast<int>(nodes_.size()) - 1;
}

void MbLoopDiagram::add_arc(int u, int v, const Angle& delta) {
  edges_.push_back({u, v, delta, 0});
  nodes_[static_cast<std::size_t>(u)].edges.push_back(static_cast<int>(edges_.size()) - 1);
  nodes_[static_cast<std::size_t>(v)].edges.push_back(static_cast<int>(edges_.size()) - 1);
}

void MbLoopDiagram::add_crosscap_chord(int u, int v) {
  // Entering at t and leaving at t + pi does not turn the lift to the
  // orientation cover at all; only the pass count changes.
  edges_.push_back({u, v, Angle(0), 1});
  nodes_[static_cast<std::size_t>(u)].edges.push_back(static_cast<int>(edges_.size()) - 1);
  nodes_[static_cast<std::size_t>(v)].edges.push_back(static_cast<int>(edges_.size()) - 1);
}

MbLoopDiagram::Traced MbLoopDiagram::trace() const {
  for (const auto& node : nodes_) {
    const std::size_t want = node.label != 0 ? 1 : 2;
    if (node.edges.size() != want) throw InternalError("loop diagram node with the wrong number of arcs");
  }
  Traced out;
  std::vector<char> used(edges_.size(), 0);
  // Walk from `node` along edge `e`, accumulating until a boundary node or
  // the starting edge comes round again.
  auto walk = [&](int node, int e, int& passes, Angle& delta) {
    const int first = e;
    for (;;) {
      used[static_cast<std::size_t>(e)] = 1;
      const Edge& edge = edges_[static_cast<std::size_t>(e)];
      passes += edge.passes;
      if (edge.u == node) {
        delta += edge.delta;
        node = edge.v;
      } else {
        delta -= edge.delta;
        node = edge.u;
      }
      const Node& at = nodes_[static_cast<std::size_t>(node)];
      if (at.label != 0) return node;
      e = at.edges[0] == e ? at.edges[1] : at.edges[0];
      if (e == first) return -1;
    }
  };
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    const Node& node = nodes_[static_cast<std::size_t>(i)];
    if (node.label == 0 || used[static_cast<std::size_t>(node.edges[0])]) continue;
    int passes = 0;
    Angle delta = 0;
    const int end = walk(i, node.edges[0], passes, delta);
    const int a = node.label, b = nodes_[static_cast<std::size_t>(end)].label;
    if (a < b)
      out.paths.push_back({a, b, passes, delta});
    else
      out.paths.push_back({b, a, passes, Angle(-delta)});
  }
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (used[static_cast<std::size_t>(e)]) continue;
    int passes = 0;
    Angle delta = 0;
    walk(edges_[static_cast<std::size_t>(e)].u, e, passes, delta);
    out.loops.push_back({passes, delta});
  }
  std::sort(out.paths.begin(), out.paths.end(), [](const Path& x, const Path& y) { return x.from < y.from; });
  return out;
}

// ---------------------------------------------------------- connections

Angle boundary_angle(int n, int k) {
  if (n < 1 || k < 1 || k > 2 * n) throw std::out_of_range("boundary point out of range");
  return Angle(1, 2) + Angle(2 * k - 1, 2 * n);
}

std::vector<std::pair<int, int>> MbConnection::crosscap_pairs() const {
  std::vector<std::pair<int, int>> out;
  const std::size_t half = crosscap.size() / 2;
  for (std::size_t j = 0; j < half; ++j) out.emplace_back(crosscap[j], crosscap[j + half]);
  return out;
}

MbConnection MbConnection::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity connection needs n >= 1");
  MbConnection c;
  c.n = n;
  for (int k = 1; k <= 2 * n; ++k) c.crosscap.push_back(k);
  return c;
}

std::string MbConnection::str() const {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (auto [a, b] : planar) {
    os << (first ? "" : " ") << a << '-' << b;
    first = false;
  }
  os << " |";
  for (int s : crosscap) os << ' ' << s;
  os << ']';
  if (crosscap.empty()) os << " hole@" << hole_gap;
  if (z_exp > 0) os << " z^" << z_exp;
  if (x_flag > 0) os << " x";
  return os.str();
}

namespace {

// Gap g lies between points g and g+1; it is inside arc (a, b) when a <= g < b.
bool gap_inside(int g, int a, int b) { return a <= g && g < b; }

// Does the crosscap lie on the inner side (gaps a..b-1) of planar arc (a, b)?
bool hole_inside(const MbConnection& c, int a, int b) {
  if (!c.crosscap.empty()) {
    const int s = c.crosscap.front();
    return a < s && s < b;
  }
  return gap_inside(c.hole_gap, a, b);
}

}  // namespace

void embed_connection(MbLoopDiagram& diagram, const MbConnection& c, const std::vector<int>& node_of_point) {
  auto phi = [&](int k) { return boundary_angle(c.n, k); };
  for (auto [a, b] : c.planar) {
    Angle delta = phi(b) - phi(a);
    if (hole_inside(c, a, b)) delta -= 2;
    diagram.add_arc(node_of_point[static_cast<std::size_t>(a)], node_of_point[static_cast<std::size_t>(b)], delta);
  }
  // Crosscap arcs: the j-th point of S runs in to the crosscap at
  // a_1 + (j-1) pi / k', so chords j and j + k' are antipodal and the
  // spokes, like the points, are in counterclockwise order.
  const int k2 = static_cast<int>(c.crosscap.size());
  if (k2 == 0) return;
  const int k = k2 / 2;
  const Angle a1 = phi(c.crosscap.front());
  std::vector<int> spoke(static_cast<std::size_t>(k2));
  for (int j = 0; j < k2; ++j) {
    spoke[static_cast<std::size_t>(j)] = diagram.add_node();
    const int s = c.crosscap[static_cast<std::size_t>(j)];
    const Angle b = a1 + Angle(j, k);
    diagram.add_arc(node_of_point[static_cast<std::size_t>(s)], spoke[static_cast<std::size_t>(j)], b - phi(s));
  }
  for (int j = 0; j < k; ++j) diagram.add_crosscap_chord(spoke[static_cast<std::size_t>(j)], spoke[static_cast<std::size_t>(j + k)]);
}

CanonicalTerm canonical_term(const MbLoopDiagram& diagram, int n, int carry_z, int carry_x) {
  const MbLoopDiagram::Traced traced = diagram.trace();
  const auto& angles = diagram.boundary_angles();
  if (static_cast<int>(angles.size()) != 2 * n) throw InternalError("diagram does not have 2n boundary points");
  CanonicalTerm out;
  MbConnection& c = out.connection;
  c.n = n;
  c.z_exp = carry_z;
  c.x_flag = carry_x;
  for (const auto& loop : traced.loops) {
    switch (classify_loop(loop.passes, loop.delta)) {
      case LoopKind::Trivial:
        ++out.d_power;
        break;
      case LoopKind::Parallel:
        ++c.z_exp;
        break;
      case LoopKind::OneSided:
        if (++c.x_flag > 1) throw InternalError("two disjoint one-sided loops");
        break;
    }
  }

  struct Side {
    int a, b;
    bool inside;
  };
  std::vector<Side> sides;
  std::vector<std::pair<int, int>> odd;
  std::map<std::pair<int, int>, Angle> odd_delta;
  for (const auto& p : traced.paths) {
    const Angle base = angles.at(p.to) - angles.at(p.from);
    if (p.passes % 2 == 0) {
      bool inside;
      if (p.delta == base)
        inside = false;
      else if (p.delta == base - 2)
        inside = true;
      else
        throw InternalError("boundary arc winds around the crosscap");
      c.planar.emplace_back(p.from, p.to);
      sides.push_back({p.from, p.to, inside});
    } else {
      c.crosscap.push_back(p.from);
      c.crosscap.push_back(p.to);
      odd.emplace_back(p.from, p.to);
      odd_delta[{p.from, p.to}] = p.delta;
    }
  }
  std::sort(c.planar.begin(), c.planar.end());
  std::sort(c.crosscap.begin(), c.crosscap.end());

  if (!c.crosscap.empty()) {
    if (c.z_exp > 0 || c.x_flag > 0) throw InternalError("closed curve disjoint from a crosscap arc");
    // The pairing and the winding of crosscap arcs are forced.
    const auto forced = c.crosscap_pairs();
    for (const auto& [s, t] : forced) {
      auto it = odd_delta.find({s, t});
      if (it == odd_delta.end()) throw InternalError("crosscap arcs not antipodally paired");
      if (it->second != angles.at(t) - angles.at(s) - 1) throw InternalError("crosscap arc winds around the crosscap");
    }
    const int s = c.crosscap.front();
    for (const auto& side : sides)
      if (side.inside != (side.a < s && s < side.b)) throw InternalError("planar arc separates the crosscap from its arcs");
    for (int t : c.crosscap)
      if (std::any_of(sides.begin(), sides.end(), [&](const Side& sd) { return (sd.a < t && t < sd.b) != (sd.a < s && s < sd.b); }))
        throw InternalError("crosscap points in different faces");
  } else if (n > 0) {
    c.hole_gap = 0;
    for (int g = 1; g <= 2 * n && c.hole_gap == 0; ++g)
      if (std::all_of(sides.begin(), sides.end(), [&](const Side& sd) { return gap_inside(g, sd.a, sd.b) == sd.inside; }))
        c.hole_gap = g;
    if (c.hole_gap == 0) throw InternalError("planar arcs disagree about where the crosscap is");
  }
  return out;
}

MbElement canonicalize(const MbLoopDiagram& diagram, int n) {
  const CanonicalTerm t = canonical_term(diagram, n);
  return MbElement(t.connection, RationalFn(loop_value().pow(static_cast<unsigned>(t.d_power))));
}

// -------------------------------------------------------------- elements

MbElement::MbElement(const MbConnection& c, RationalFn coeff) : n_(c.n) {
  if (!coeff.is_zero()) terms_.emplace(c, std::move(coeff));
}

RationalFn MbElement::coeff(const MbConnection& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? RationalFn() : it->second;
}

void MbElement::add_term(const MbConnection& c, const RationalFn& coeff) {
  if (c.n != n_) throw std::invalid_argument("MbElement: connection has the wrong size");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

MbElement& MbElement::operator+=(const MbElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("MbElement: size mismatch");
  for (const auto& [c, v] : o.terms_) add_term(c, v);
  return *this;
}

MbElement& MbElement::operator-=(const MbElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("MbElement: size mismatch");
  for (const auto& [c, v] : o.terms_) add_term(c, -v);
  return *this;
}

MbElement& MbElement::operator*=(const RationalFn& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string MbElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, v] : terms_) {
    os << (first ? "" : " + ") << '(' << v.str() << ")*" << c.str();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- action

namespace {

enum class Side { Left, Right };

// Glue the TL diagram t into a collar on one side of connection c.
CanonicalTerm glue(const Matching& t, const MbConnection& c, Side side) {
  const int n = c.n;
  if (!t.is_square() || t.strands() != n) throw std::invalid_argument("TL element and Mb element sizes differ");
  MbLoopDiagram g;
  std::vector<int> old_node(static_cast<std::size_t>(2 * n + 1), -1);
  std::vector<int> box_node(static_cast<std::size_t>(2 * n), -1);  // by TL position
  std::vector<Angle> box_angle(static_cast<std::size_t>(2 * n));
  for (int pos = 0; pos < n; ++pos) {
    // The collar side of the old boundary, and the matching new points.
    const int glued = side == Side::Left ? pos + 1 : 2 * n - pos;
    old_node[static_cast<std::size_t>(glued)] = g.add_node();
    const Angle a = boundary_angle(n, glued);
    const int inner_pos = side == Side::Left ? n + pos : pos;
    const int outer_pos = side == Side::Left ? pos : n + pos;
    box_node[static_cast<std::size_t>(inner_pos)] = old_node[static_cast<std::size_t>(glued)];
    box_node[static_cast<std::size_t>(outer_pos)] = g.add_boundary_node(glued, a);
    box_angle[static_cast<std::size_t>(inner_pos)] = a;
    box_angle[static_cast<std::size_t>(outer_pos)] = a;
  }
  for (int k = 1; k <= 2 * n; ++k)
    if (old_node[static_cast<std::size_t>(k)] == -1) old_node[static_cast<std::size_t>(k)] = g.add_boundary_node(k, boundary_angle(n, k));
  for (int pos = 0; pos < 2 * n; ++pos) {
    const int q = t.partner(pos);
    if (q < pos) continue;
    g.add_arc(box_node[static_cast<std::size_t>(pos)], box_node[static_cast<std::size_t>(q)],
              box_angle[static_cast<std::size_t>(q)] - box_angle[static_cast<std::size_t>(pos)]);
  }
  embed_connection(g, c, old_node);
  return canonical_term(g, n, c.z_exp, c.x_flag);
}

MbElement act_impl(const TLElement& t, const MbElement& m, Side side) {
  if (!t.is_square() || t.strands() != m.n()) throw std::invalid_argument("act: TL element and Mb element sizes differ");
  MbElement out(m.n());
  const LaurentPoly d = loop_value();
  for (const auto& [tm, tc] : t.terms())
    for (const auto& [mc, mv] : m.terms()) {
      const CanonicalTerm ct = glue(tm, mc, side);
      RationalFn coeff = tc * mv;
      if (ct.d_power > 0) coeff *= RationalFn(d.pow(static_cast<unsigned>(ct.d_power)));
      out.add_term(ct.connection, coeff);
    }
  return out;
}

}  // namespace

MbElement act(const TLElement& t, const MbElement& m) { return act_impl(t, m, Side::Left); }

MbElement right_act(const MbElement& m, const TLElement& t) { return act_impl(t, m, Side::Right); }

bool slide_fn_crosscap_check(int n) {
  const MbElement one(MbConnection::identity(n));
  return act(jones_wenzl(n), one) == right_act(one, jones_wenzl(n));
}

// -------------------------------------------------------- closed elements

ClosedMbElement ClosedMbElement::from_z_poly(const FormalPoly& p, int x_deg) {
  ClosedMbElement r;
  for (const auto& [deg, c] : p.coeffs()) r.add_term(deg, x_deg, c);
  return r;
}

ClosedMbElement ClosedMbElement::monomial(int z_deg, int x_deg, RationalFn c) {
  ClosedMbElement r;
  r.add_term(z_deg, x_deg, c);
  return r;
}

RationalFn ClosedMbElement::coeff(int z_deg, int x_deg) const {
  auto it = terms_.find({z_deg, x_deg});
  return it == terms_.end() ? RationalFn() : it->second;
}

int ClosedMbElement::max_x_degree() const {
  int m = -1;
  for (const auto& [k, v] : terms_) m = std::max(m, k.second);
  return m;
}

int ClosedMbElement::min_x_degree() const {
  int m = -1;
  for (const auto& [k, v] : terms_) m = m < 0 ? k.second : std::min(m, k.second);
  return m;
}

void ClosedMbElement::add_term(int z_deg, int x_deg, const RationalFn& c) {
  if (z_deg < 0 || x_deg < 0 || x_deg > 1) throw std::domain_error("closed Mb element: degree out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({z_deg, x_deg}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ClosedMbElement& ClosedMbElement::operator+=(const ClosedMbElement& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, v);
  return *this;
}

ClosedMbElement& ClosedMbElement::operator-=(const ClosedMbElement& o) {
  for (const auto& [k, v] : o.terms_) add_term(k.first, k.second, -v);
  return *this;
}

ClosedMbElement& ClosedMbElement::operator*=(const RationalFn& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ClosedMbElement ClosedMbElement::times_x() const {
  ClosedMbElement r;
  for (const auto& [k, v] : terms_) {
    if (k.second > 0) throw std::domain_error("times_x: x^2 is outside the supported range");
    r.add_term(k.first, 1, v);
  }
  return r;
}

std::vector<std::pair<std::pair<int, int>, RationalFn>> ClosedMbElement::ordered_terms() const {
  return {terms_.rbegin(), terms_.rend()};
}

namespace {

std::string monomial_text(int z_deg, int x_deg, bool latex) {
  std::string s;
  if (x_deg == 1) s += "x";
  if (z_deg > 0) {
    if (!s.empty() && !latex) s += "*";
    s += "z";
    if (z_deg > 1) s += latex ? "^{" + std::to_string(z_deg) + "}" : "^" + std::to_string(z_deg);
  }
  return s;
}

std::string render_closed(const ClosedMbElement& e, bool latex) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.ordered_terms()) {
    const std::string mono = monomial_text(k.first, k.second, latex);
    const bool integer = c.is_polynomial() && c.num().is_constant();
    const bool negative = integer && c.num().leading_coeff() < 0;
    const RationalFn shown = negative ? -c : c;
    std::string cs = latex ? shown.latex() : shown.str();
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << '-';
    first = false;
    if (mono.empty()) {
      os << (integer || latex ? cs : "(" + cs + ")");
    } else if (integer && cs == "1") {
      os << mono;
    } else if (integer) {
      os << cs << (latex ? "" : "*") << mono;
    } else {
      os << (latex ? "\\left(" + cs + "\\right)" : "(" + cs + ")*") << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string ClosedMbElement::str() const { return render_closed(*this, false); }
std::string ClosedMbElement::latex() const { return render_closed(*this, true); }

// --------------------------------------------------------------- closure

ClosedMbElement close_mobius(const TLElement& x, const ClosurePattern& pattern) {
  const int n = x.strands();
  if (pattern.thru < 0 || pattern.around < 0 || pattern.trivial < 0 || pattern.thru + pattern.around + pattern.trivial != n)
    throw std::invalid_argument("close_mobius: block sizes must be nonnegative and sum to the strand count");
  const int thru = pattern.thru;
  // The box occupies angles [-alpha, alpha]; strands run counterclockwise
  // from its left side to its right side, strand 1 nearest the crosscap.
  const Angle alpha(1, 4);
  std::vector<Angle> entry(static_cast<std::size_t>(thru) + 1);
  for (int j = 1; j <= thru; ++j) entry[static_cast<std::size_t>(j)] = alpha + Angle(j, 2 * (thru + 1));

  const LaurentPoly d = loop_value();
  ClosedMbElement out;
  for (const auto& [m, c] : x.terms()) {
    MbLoopDiagram g;
    std::vector<int> node(static_cast<std::size_t>(2 * n));
    for (auto& v : node) v = g.add_node();
    auto left = [&](int j) { return node[static_cast<std::size_t>(j - 1)]; };
    auto right = [&](int j) { return node[static_cast<std::size_t>(n + j - 1)]; };
    for (int pos = 0; pos < 2 * n; ++pos) {
      const int q = m.partner(pos);
      if (q < pos) continue;
      const bool pl = pos < n, ql = q < n;
      const Angle delta = pl == ql ? Angle(0) : (pl ? Angle(2 * alpha) : Angle(-2 * alpha));
      g.add_arc(node[static_cast<std::size_t>(pos)], node[static_cast<std::size_t>(q)], delta);
    }
    for (int j = 1; j <= n; ++j) {
      if (j <= thru) {
        const Angle& t = entry[static_cast<std::size_t>(j)];
        const int in = g.add_node(), out_node = g.add_node();
        g.add_arc(right(j), in, t - alpha);
        g.add_crosscap_chord(in, out_node);
        g.add_arc(out_node, left(thru + 1 - j), Angle(1) - alpha - t);
      } else if (j <= thru + pattern.around) {
        g.add_arc(right(j), left(j), Angle(2) - 2 * alpha);
      } else {
        g.add_arc(right(j), left(j), Angle(-2 * alpha));
      }
    }
    const auto traced = g.trace();
    int trivial = 0, parallel = 0, one_sided = 0;
    for (const auto& loop : traced.loops) {
      switch (classify_loop(loop.passes, loop.delta)) {
        case LoopKind::Trivial:
          ++trivial;
          break;
        case LoopKind::Parallel:
          ++parallel;
          break;
        case LoopKind::OneSided:
          ++one_sided;
          break;
      }
    }
    if (one_sided > 1) throw InternalError("closure produced two one-sided loops");
    out.add_term(parallel, one_sided, trivial > 0 ? c * RationalFn(d.pow(static_cast<unsigned>(trivial))) : c);
  }
  return out;
}

// ----------------------------------------------------------- enumeration

namespace {

void noncrossing_matchings(const std::vector<int>& pts, std::size_t lo, std::size_t hi,
                           std::vector<std::pair<int, int>>& cur, std::vector<std::vector<std::pair<int, int>>>& out,
                           std::vector<std::pair<std::size_t, std::size_t>>& pending) {
  if (lo >= hi) {
    if (pending.empty()) {
      out.push_back(cur);
      return;
    }
    const auto range = pending.back();
    pending.pop_back();
    noncrossing_matchings(pts, range.first, range.second, cur, out, pending);
    pending.push_back(range);
    return;
  }
  for (std::size_t k = lo + 1; k < hi; k += 2) {
    cur.emplace_back(pts[lo], pts[k]);
    pending.emplace_back(k + 1, hi);
    noncrossing_matchings(pts, lo + 1, k, cur, out, pending);
    pending.pop_back();
    cur.pop_back();
  }
}

std::vector<std::vector<std::pair<int, int>>> all_noncrossing(const std::vector<int>& pts) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  noncrossing_matchings(pts, 0, pts.size(), cur, out, pending);
  return out;
}

}  // namespace

std::vector<MbConnection> enumerate_mb_basis(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("enumerate_mb_basis: need n >= 1 and 0 <= k <= n");
  if (n > 10) throw ResourceLimit("enumerate_mb_basis: n <= 10 supported");
  const int s_size = 2 * (n - k);
  std::vector<MbConnection> out;
  for (unsigned mask = 0; mask < (1u << (2 * n)); ++mask) {
    if (std::popcount(mask) != s_size) continue;
    std::vector<int> s, rest;
    for (int p = 1; p <= 2 * n; ++p) (mask >> (p - 1) & 1u ? s : rest).push_back(p);
    for (auto& arcs : all_noncrossing(rest)) {
      std::sort(arcs.begin(), arcs.end());
      auto inside = [&](int g, std::pair<int, int> arc) { return arc.first <= g && g < arc.second; };
      if (!s.empty()) {
        // Every crosscap point must see the crosscap: all in one face.
        bool ok = true;
        for (const auto& arc : arcs)
          for (int t : s)
            if ((arc.first < t && t < arc.second) != (arc.first < s[0] && s[0] < arc.second)) ok = false;
        if (!ok) continue;
        out.push_back({n, arcs, s, 0, 0, 0});
        continue;
      }
      // No crosscap arcs: one connection per face, named by its smallest gap.
      std::map<std::vector<bool>, int> faces;
      for (int g = 1; g <= 2 * n; ++g) {
        std::vector<bool> key;
        for (const auto& arc : arcs) key.push_back(inside(g, arc));
        faces.try_emplace(key, g);
      }
      for (const auto& [key, g] : faces) out.push_back({n, arcs, {}, g, 0, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------- closed forms

namespace {

RationalFn D(int n) { return RationalFn(delta(n)); }
FormalPoly S(int n) { return chebyshev(ChebyshevKind::Second, n); }

}  // namespace

ClosedMbElement tr_mb1_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("tr_mb1_closed_form: n >= 1");
  FormalPoly sum;
  for (int k = 0; k <= n - 1; ++k) {
    const RationalFn sign((n - 1 + k) % 2 == 0 ? 1 : -1);
    sum += S(k) * (sign * D(k));
  }
  return ClosedMbElement::from_z_poly(sum * D(n - 1).inverse(), 1);
}

ClosedMbElement tr_mb2_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("tr_mb2_closed_form: n >= 2");
  FormalPoly sum;
  const RationalFn norm = (D(n - 1) * D(n - 2)).inverse();
  for (int i = 0; i <= n - 2; ++i) sum += (S(i + 1) - S(i)) * (D(i + 1) * D(i) * norm);
  return ClosedMbElement::from_z_poly(sum);
}

RecursionCheck check_mb1_recursion(int n) {
  if (n < 2) throw std::invalid_argument("check_mb1_recursion: n >= 2");
  RecursionCheck r;
  r.lhs = close_mobius(jones_wenzl(n), {1, n - 1, 0});
  r.rhs = ClosedMbElement::from_z_poly(S(n - 1), 1) -
          RationalFn(delta(n - 2), delta(n - 1)) * close_mobius(jones_wenzl(n - 1), {1, n - 2, 0});
  r.holds = r.lhs == r.rhs;
  return r;
}

RecursionCheck check_mb2_recursion(int n) {
  if (n < 3) throw std::invalid_argument("check_mb2_recursion: n >= 3");
  RecursionCheck r;
  r.lhs = close_mobius(jones_wenzl(n), {2, n - 2, 0});
  r.rhs = ClosedMbElement::from_z_poly(S(n - 1) - S(n - 2)) +
          RationalFn(delta(n - 3), delta(n - 1)) * close_mobius(jones_wenzl(n - 1), {2, n - 3, 0});
  r.holds = r.lhs == r.rhs;
  return r;
}

// ------------------------------------------------------------ band model

LoopKind classify_band_loop(const std::vector<BandSegment>& loop) {
  if (loop.empty()) throw std::invalid_argument("band loop has no pieces");
  int passes = 0;
  mpq_class shift = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const BandSegment& s = loop[i];
    const BandSegment& next = loop[(i + 1) % loop.size()];
    for (const auto* v : {&s.x0, &s.y0, &s.x1, &s.y1})
      if (*v < 0 || *v > 1) throw std::invalid_argument("band loop leaves the unit square");
    shift += s.x1 - s.x0;
    if (next.x0 == s.x1 && next.y0 == s.y1) continue;
    const bool glued = (s.x1 == 1 && next.x0 == 0) || (s.x1 == 0 && next.x0 == 1);
    if (!glued || next.y0 != 1 - s.y1) throw std::invalid_argument("band loop pieces do not join up");
    ++passes;
  }
  // The orientation cover is [0, 2] x [0, 1] with its ends glued, so one
  // band width corresponds to pi in the crosscap model.
  return classify_loop(passes, shift);
}

}  // namespace skein
