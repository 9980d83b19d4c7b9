#pragma once

#include <compare>
#include <string>

#include "skein/laurent_poly.hpp"

namespace skein {

/// Element of Q(A), kept as a reduced fraction num/den of Laurent polynomials.
///
/// Canonical form: gcd(num, den) = 1 in Z[A, A^-1] (integer content
/// included), den has lowest exponent 0 and a positive leading coefficient.
/// Powers of A therefore always live in the numerator, and two values are
/// equal iff their stored pairs are identical.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == LaurentPoly(1); }
  bool is_one() const { return is_polynomial() && num_ == LaurentPoly(1); }

  RationalFn inverse() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const;

  RationalFn pow(int e) const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) = default;
  /// Arbitrary total order on canonical forms (for ordered containers).
  friend std::strong_ordering operator<=>(const RationalFn& a, const RationalFn& b);

  /// "A^4 + 1" or "(-A^2)/(A^4 + 1)".
  std::string str() const;
  /// "\frac{-A^{2}}{A^{4} + 1}" or the bare numerator.
  std::string latex() const;

 private:
  struct Canonical {};
  RationalFn(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalise();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace skein
