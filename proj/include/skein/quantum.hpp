#pragma once

#include <map>
#include <string>

#include "skein/laurent_poly.hpp"
#include "skein/rational_fn.hpp"

namespace skein {

/// Polynomial in one formal variable with Q(A) coefficients.  Used both for
/// polynomials in the loop value d and for polynomials in the annular /
/// Mobius curve z.
class FormalPoly {
 public:
  FormalPoly() = default;
  FormalPoly(RationalFn c);  // NOLINT(google-explicit-constructor)
  static FormalPoly variable(int degree = 1);

  const std::map<int, RationalFn>& coeffs() const { return coeffs_; }
  RationalFn coeff(int degree) const;
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }
  /// True when every coefficient lies in Z (no A, no denominator).
  bool has_integer_coefficients() const;

  FormalPoly& operator+=(const FormalPoly& o);
  FormalPoly& operator-=(const FormalPoly& o);
  friend FormalPoly operator+(FormalPoly a, const FormalPoly& b) { return a += b; }
  friend FormalPoly operator-(FormalPoly a, const FormalPoly& b) { return a -= b; }
  friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
  friend FormalPoly operator*(FormalPoly a, const RationalFn& c);
  FormalPoly operator-() const;

  RationalFn evaluate(const RationalFn& at) const;

  friend bool operator==(const FormalPoly& a, const FormalPoly& b) = default;

  /// Render with the given variable name, highest degree first.
  std::string str(const std::string& var) const;
  std::string latex(const std::string& var) const;

 private:
  void set(int degree, RationalFn c);
  std::map<int, RationalFn> coeffs_;
};

/// The loop value d = -A^2 - A^-2.
LaurentPoly loop_value();

/// [n] = 1 + A^4 + ... + A^{4(n-1)}; [0] = 0.  Throws for n < 0.
LaurentPoly quantum_int(int n);
/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly quantum_factorial(int n);
/// Delta_n = (-1)^n A^{-2n} [n+1], the value of S_n at d.
LaurentPoly delta(int n);

enum class ChebyshevKind { First, Second };

/// T_n or S_n as a polynomial in d: P_n = d P_{n-1} - P_{n-2},
/// T_0 = 2, T_1 = d, S_0 = 1, S_1 = d.
FormalPoly chebyshev(ChebyshevKind kind, int n);

/// Encircling coefficient: an a-coloured meridian around a b-coloured bundle
/// multiplies it by (-1)^a (A^{2(b+1)(a+1)} - A^{-2(b+1)(a+1)}) / (A^{2(b+1)} - A^{-2(b+1)}).
/// The division is exact, so the result is always a Laurent polynomial.
LaurentPoly varsigma(int a, int b);

}  // namespace skein
