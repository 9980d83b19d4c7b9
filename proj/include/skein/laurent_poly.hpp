#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

/// Laurent polynomial in one variable A with arbitrary-precision integer
/// coefficients, i.e. an element of Z[A, A^-1].
///
/// Stored densely from the lowest to the highest nonzero exponent; the
/// first and last stored coefficients are always nonzero, and the zero
/// polynomial stores nothing.  Interior zeros are not "terms".
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integers embed
  explicit LaurentPoly(const mpz_class& c);

  static LaurentPoly monomial(const mpz_class& c, int exponent);
  /// A^k
  static LaurentPoly A(int k = 1) { return monomial(1, k); }
  /// Build from (exponent, coefficient) pairs; repeated exponents are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<int, mpz_class>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t span() const { return coeffs_.size(); }

  mpz_class coeff(int exponent) const;
  const mpz_class& leading_coeff() const { return coeffs_.back(); }
  const mpz_class& trailing_coeff() const { return coeffs_.front(); }
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, mpz_class>> terms() const;
  std::size_t term_count() const;

  /// Multiply by A^k.
  LaurentPoly shifted(int k) const;
  /// Substitute A -> A^-1.
  LaurentPoly mirrored() const;
  /// gcd of all coefficients (0 for the zero polynomial), always >= 0.
  mpz_class content() const;
  /// Sum of absolute values of the coefficients.
  mpz_class l1_norm() const;
  /// Largest absolute value of a coefficient.
  mpz_class max_norm() const;
  /// Divide every coefficient by c; c must divide each one.
  LaurentPoly divided_by(const mpz_class& c) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& c);
  /// this += a * b without materialising the product.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  /// Total order (by low degree, span, then coefficients); only for use as keys.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  /// "-A^2 - A^-2", "1", "0".
  std::string str() const;
  /// "-A^{2} - A^{-2}".
  std::string latex() const;

  std::size_t hash() const;

  // Raw dense access for the packing helpers.
  const std::vector<mpz_class>& dense() const { return coeffs_; }
  static LaurentPoly from_dense(int low, std::vector<mpz_class> coeffs);

 private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Quotient q with a = q * b.  Throws NotDivisible if the division leaves a
/// remainder and DivisionByZero if b is zero.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Z[A, A^-1], normalised to lowest exponent 0
/// with a positive leading coefficient.  gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
