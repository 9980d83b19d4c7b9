#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

struct Composition;
class Matching;
Composition compose(const Matching& a, const Matching& b);

/// A crossingless tangle in a rectangle, i.e. a noncrossing perfect matching
/// of its boundary points.  The left side carries `left` points and the
/// right side `right` points; Temperley-Lieb basis diagrams are the square
/// case left == right == n.
///
/// Two numberings are used:
///  * position index (internal, 0-based): left side top-to-bottom is
///    0..left-1, right side top-to-bottom is left..left+right-1;
///  * boundary point (external, 1-based): left side top-to-bottom is
///    1..left, right side bottom-to-top is left+1..left+right, so that
///    1..left+right runs once around the boundary.
class Matching {
 public:
  Matching() = default;
  /// `partner` is indexed by position index.  Throws std::invalid_argument
  /// unless it is a fixed-point-free involution with no crossing pairs.
  Matching(int left, int right, std::vector<std::int8_t> partner);

  static Matching identity(int n);
  /// e_i on n strands, 1 <= i <= n-1: caps at positions i, i+1 on both sides.
  static Matching generator(int n, int i);
  /// Build from 1-based boundary-point pairs.
  static Matching from_boundary_pairs(int left, int right, const std::vector<std::pair<int, int>>& pairs);

  int left() const { return left_; }
  int right() const { return right_; }
  bool is_square() const { return left_ == right_; }
  /// Strand count of a square diagram; throws otherwise.
  int strands() const;
  int size() const { return left_ + right_; }
  int partner(int position) const { return partner_[static_cast<std::size_t>(position)]; }
  const std::vector<std::int8_t>& partners() const { return partner_; }

  /// 1-based boundary point of a position index and back.
  int boundary_point(int position) const;
  int position_of(int boundary_point) const;
  /// Sorted list of 1-based boundary-point pairs (a < b).
  std::vector<std::pair<int, int>> boundary_pairs() const;

  /// Number of strands running from the left side to the right side.
  int through_strands() const;

  /// Append k horizontal strands below the diagram.
  Matching with_strands_below(int k) const;
  /// Put k horizontal strands above the diagram.
  Matching with_strands_above(int k) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b);

  std::string str() const;
  std::size_t hash() const;

 private:
  struct Trusted {};
  Matching(int left, int right, std::vector<std::int8_t> partner, Trusted)
      : left_(left), right_(right), partner_(std::move(partner)) {}
  friend Composition compose(const Matching& a, const Matching& b);
  friend class MatchingBuilder;

  int left_ = 0;
  int right_ = 0;
  std::vector<std::int8_t> partner_;
};

struct MatchingHash {
  std::size_t operator()(const Matching& m) const { return m.hash(); }
};

struct Composition {
  Matching result;
  int loops = 0;
};

/// Stack a (on the left) against b (on the right); a.right() must equal
/// b.left().  Closed components formed at the interface are counted, not kept.
Composition compose(const Matching& a, const Matching& b);

/// All noncrossing perfect matchings of a rectangle with the given sides, in
/// increasing order.  enumerate_matchings(n) is the square case (Catalan many).
std::vector<Matching> enumerate_planar(int left, int right);
std::vector<Matching> enumerate_matchings(int n);

/// True when a 1-based pairing of the cyclically ordered points 1..2m has no
/// two interleaving pairs.
bool is_noncrossing(const std::vector<std::pair<int, int>>& pairs);

/// Internal helper for code that produces matchings it already knows are
/// planar (gluing, closure); skips the crossing check.
class MatchingBuilder {
 public:
  static Matching trusted(int left, int right, std::vector<std::int8_t> partner) {
    return Matching(left, right, std::move(partner), Matching::Trusted{});
  }
};

}  // namespace skein

template <>
struct std::hash<skein::Matching> {
  std::size_t operator()(const skein::Matching& m) const { return m.hash(); }
};
