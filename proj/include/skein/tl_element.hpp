#pragma once

#include <map>
#include <string>

#include "skein/matching.hpp"
#include "skein/rational_fn.hpp"

namespace skein {

/// Finite Q(A)-linear combination of crossingless diagrams with a fixed
/// shape (left and right point counts).  The square case is an element of
/// TL_n; rectangular elements show up as intermediate states of the tangle
/// resolver.
class TLElement {
 public:
  TLElement() = default;
  /// The zero element of the given shape.
  TLElement(int left, int right) : left_(left), right_(right) {}
  /// c times a single diagram.
  explicit TLElement(const Matching& m, RationalFn c = RationalFn(1));

  static TLElement identity(int n);
  static TLElement generator(int n, int i);

  int left() const { return left_; }
  int right() const { return right_; }
  bool is_square() const { return left_ == right_; }
  int strands() const;

  const std::map<Matching, RationalFn>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  RationalFn coeff(const Matching& m) const;

  /// this += c * m
  void add_term(const Matching& m, const RationalFn& c);

  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  TLElement& operator*=(const RationalFn& c);
  TLElement operator-() const;
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(TLElement a, const RationalFn& c) { return a *= c; }
  friend TLElement operator*(const RationalFn& c, TLElement a) { return a *= c; }
  /// Diagram composition: x's right side glued to y's left side, every
  /// closed loop replaced by d.
  friend TLElement operator*(const TLElement& x, const TLElement& y);

  friend bool operator==(const TLElement& a, const TLElement& b) = default;

  /// x (x) 1_k with the new strands added below (resp. above).
  TLElement with_strands_below(int k) const;
  TLElement with_strands_above(int k) const;

  std::string str() const;

 private:
  int left_ = 0;
  int right_ = 0;
  std::map<Matching, RationalFn> terms_;
};

TLElement multiply(const TLElement& x, const TLElement& y);

}  // namespace skein
