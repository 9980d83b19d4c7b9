#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/quantum.hpp"
#include "skein/tl_element.hpp"

namespace skein {

/// Angles and angular displacements, as rational multiples of pi.
using Angle = mpq_class;

/// The three isotopy classes of simple closed curves in the Mobius band.
enum class LoopKind {
  Trivial,    ///< bounds a disk; evaluates to d
  Parallel,   ///< two-sided, parallel to the boundary: z
  OneSided,   ///< the core, through the crosscap once: x
};

/// Classify an embedded loop from its number of crosscap passes and its
/// total angular displacement around the crosscap (in units of pi).  In the
/// orientation double cover an odd loop lifts to one curve (x); an even loop
/// lifts to two curves; a displacement of 0 gives d and a full turn (+-2)
/// gives z.  Anything else cannot be embedded and throws InternalError.
LoopKind classify_loop(int crosscap_passes, const Angle& displacement);

/// Arcs and loops in the crosscap model: the Mobius band is the region
/// between an outer boundary circle and a crosscap circle whose antipodal
/// points are identified.  Every arc records its angular displacement, so
/// classification is exact integer/rational bookkeeping.
class MbLoopDiagram {
 public:
  /// A marked point on the outer boundary.
  int add_boundary_node(int label, const Angle& angle);
  /// A junction (gluing point or crosscap point).
  int add_node();
  /// Arc in the exterior region from u to v turning by `delta`.
  void add_arc(int u, int v, const Angle& delta);
  /// Pass through the crosscap: u at angle t, v at angle t + pi.
  void add_crosscap_chord(int u, int v);

  struct Path {
    int from;  ///< boundary label, from < to
    int to;
    int passes;
    Angle delta;  ///< displacement travelling from -> to
  };
  struct Loop {
    int passes;
    Angle delta;
  };
  struct Traced {
    std::vector<Path> paths;  ///< sorted by `from`
    std::vector<Loop> loops;
  };
  /// Follow every component.  Throws InternalError if a junction does not
  /// have exactly two arcs or a boundary node more than one.
  Traced trace() const;

  const std::map<int, Angle>& boundary_angles() const { return boundary_angle_; }

 private:
  struct Edge {
    int u, v;
    Angle delta;
    int passes;
  };
  struct Node {
    int label = 0;  // 0 for junctions
    std::vector<int> edges;
  };
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::map<int, Angle> boundary_angle_;
};

/// Basis element of the relative skein module of Mb with 2n marked points:
/// a crossingless connection plus z^z_exp x^x_flag.
///
/// Points 1..2n run counterclockwise around the boundary; 1..n form the
/// left side top to bottom and n+1..2n the right side bottom to top, as for
/// TL diagrams.  Arcs through the crosscap are not stored: the sorted set
/// S = `crosscap` pairs its j-th point with its (j+|S|/2)-th.
///
/// A crossingless connection with S empty does not yet say on which side of
/// its arcs the crosscap lies, so it also records `hole_gap`: the smallest g
/// such that the crosscap sits in the face touching the boundary between
/// points g and g+1 (g = 2n: between 2n and 1).  It is 0 when S is nonempty.
struct MbConnection {
  int n = 0;
  std::vector<std::pair<int, int>> planar;  ///< sorted pairs a < b
  std::vector<int> crosscap;                ///< sorted, even size
  int hole_gap = 0;
  int z_exp = 0;
  int x_flag = 0;

  /// Number of times the connection meets the crosscap.
  int crosscap_intersections() const { return static_cast<int>(crosscap.size()) / 2; }
  std::vector<std::pair<int, int>> crosscap_pairs() const;

  /// 1_{Mb_n}: point j joined to point n+j through the crosscap.
  static MbConnection identity(int n);

  friend auto operator<=>(const MbConnection&, const MbConnection&) = default;
  friend bool operator==(const MbConnection&, const MbConnection&) = default;

  std::string str() const;
};

/// Angle of boundary point k (1..2n): pi/2 + (2k-1) pi / (2n).
Angle boundary_angle(int n, int k);

class MbElement {
 public:
  explicit MbElement(int n = 0) : n_(n) {}
  explicit MbElement(const MbConnection& c, RationalFn coeff = RationalFn(1));

  int n() const { return n_; }
  const std::map<MbConnection, RationalFn>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  RationalFn coeff(const MbConnection& c) const;
  void add_term(const MbConnection& c, const RationalFn& coeff);

  MbElement& operator+=(const MbElement& o);
  MbElement& operator-=(const MbElement& o);
  MbElement& operator*=(const RationalFn& c);
  friend MbElement operator+(MbElement a, const MbElement& b) { return a += b; }
  friend MbElement operator-(MbElement a, const MbElement& b) { return a -= b; }
  friend MbElement operator*(const RationalFn& c, MbElement a) { return a *= c; }
  friend bool operator==(const MbElement&, const MbElement&) = default;

  std::string str() const;

 private:
  int n_;
  std::map<MbConnection, RationalFn> terms_;
};

/// Reduce a traced diagram with 2n boundary points to a basis term: every
/// loop becomes d (as a power returned separately), z or x, and every arc
/// keeps only its crosscap parity and side.  `carry_z`/`carry_x` are curves
/// already present.  Throws InternalError for input that is not embedded.
struct CanonicalTerm {
  MbConnection connection;
  int d_power = 0;
};
CanonicalTerm canonical_term(const MbLoopDiagram& diagram, int n, int carry_z = 0, int carry_x = 0);
MbElement canonicalize(const MbLoopDiagram& diagram, int n);

/// Crosscap-model picture of a basis connection, boundary point k becoming
/// node node_of_point[k].  Used when gluing.
void embed_connection(MbLoopDiagram& diagram, const MbConnection& c, const std::vector<int>& node_of_point);

/// t acting on the left side (points 1..n) of m.
MbElement act(const TLElement& t, const MbElement& m);
/// t acting on the right side (points n+1..2n) of m.
MbElement right_act(const MbElement& m, const TLElement& t);

/// act(f_n, 1_{Mb_n}) == right_act(1_{Mb_n}, f_n).
bool slide_fn_crosscap_check(int n);

/// Closed elements: polynomials in z and x (x-degree at most 1) over Q(A).
class ClosedMbElement {
 public:
  ClosedMbElement() = default;
  /// p(z) x^x_deg
  static ClosedMbElement from_z_poly(const FormalPoly& p, int x_deg = 0);
  static ClosedMbElement monomial(int z_deg, int x_deg, RationalFn c = RationalFn(1));

  /// keyed by (z degree, x degree)
  const std::map<std::pair<int, int>, RationalFn>& terms() const { return terms_; }
  RationalFn coeff(int z_deg, int x_deg) const;
  bool is_zero() const { return terms_.empty(); }
  /// Highest x degree present, -1 for zero.
  int max_x_degree() const;
  int min_x_degree() const;

  void add_term(int z_deg, int x_deg, const RationalFn& c);
  ClosedMbElement& operator+=(const ClosedMbElement& o);
  ClosedMbElement& operator-=(const ClosedMbElement& o);
  ClosedMbElement& operator*=(const RationalFn& c);
  friend ClosedMbElement operator+(ClosedMbElement a, const ClosedMbElement& b) { return a += b; }
  friend ClosedMbElement operator-(ClosedMbElement a, const ClosedMbElement& b) { return a -= b; }
  friend ClosedMbElement operator*(const RationalFn& c, ClosedMbElement a) { return a *= c; }
  friend ClosedMbElement operator*(ClosedMbElement a, const RationalFn& c) { return a *= c; }
  /// Multiply by x; throws std::domain_error if a term already has x.
  ClosedMbElement times_x() const;
  friend bool operator==(const ClosedMbElement&, const ClosedMbElement&) = default;

  /// Terms ordered by z degree then x degree, both descending.
  std::vector<std::pair<std::pair<int, int>, RationalFn>> ordered_terms() const;
  std::string str() const;
  std::string latex() const;

 private:
  std::map<std::pair<int, int>, RationalFn> terms_;
};

struct ClosurePattern {
  int thru = 0;
  int around = 0;
  int trivial = 0;
};

/// Close x in the Mobius band.  Strands are numbered from the top; the first
/// `thru` close through the crosscap (strand j coming back as strand
/// thru+1-j, which is how antipodal closing arcs nest), the next `around`
/// go once around the crosscap and the rest close off in a disk.
ClosedMbElement close_mobius(const TLElement& x, const ClosurePattern& pattern);

/// All basis connections on 2n points meeting the crosscap n-k times
/// (no z, no x), in increasing order.  0 <= k <= n; for k = n every face
/// of a planar matching is a possible position of the crosscap.
std::vector<MbConnection> enumerate_mb_basis(int n, int k);

/// x/Delta_{n-1} sum_{k=0}^{n-1} (-1)^{n-1+k} S_k(z) Delta_k
ClosedMbElement tr_mb1_closed_form(int n);
/// sum_{i=0}^{n-2} Delta_{i+1} Delta_i / (Delta_{n-1} Delta_{n-2}) (S_{i+1}(z) - S_i(z))
ClosedMbElement tr_mb2_closed_form(int n);

struct RecursionCheck {
  bool holds = false;
  ClosedMbElement lhs;
  ClosedMbElement rhs;
};
/// close(f_n,(1,n-1,0)) == x S_{n-1}(z) - (Delta_{n-2}/Delta_{n-1}) close(f_{n-1},(1,n-2,0)), n >= 2.
RecursionCheck check_mb1_recursion(int n);
/// close(f_n,(2,n-2,0)) == S_{n-1}(z) - S_{n-2}(z) + (Delta_{n-3}/Delta_{n-1}) close(f_{n-1},(2,n-3,0)), n >= 3.
RecursionCheck check_mb2_recursion(int n);

/// The band model: the unit square with (0, y) glued to (1, 1 - y).  A loop
/// is a cyclic list of straight pieces; a piece ending on the side x = 1
/// continues from x = 0 (and vice versa).
struct BandSegment {
  mpq_class x0, y0, x1, y1;
};
LoopKind classify_band_loop(const std::vector<BandSegment>& loop);

}  // namespace skein
