#include "skein/quantum.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

FormalPoly::FormalPoly(RationalFn c) { set(0, std::move(c)); }

FormalPoly FormalPoly::variable(int degree) {
  FormalPoly p;
  p.set(degree, RationalFn(1));
  return p;
}

void FormalPoly::set(int degree, RationalFn c) {
  if (c.is_zero())
    coeffs_.erase(degree);
  else
    coeffs_[degree] = std::move(c);
}

RationalFn FormalPoly::coeff(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? RationalFn() : it->second;
}

bool FormalPoly::has_integer_coefficients() const {
  for (const auto& [deg, c] : coeffs_)
    if (!c.is_polynomial() || !c.num().is_constant()) return false;
  return true;
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& o) {
  for (const auto& [deg, c] : o.coeffs_) set(deg, coeff(deg) + c);
  return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& o) {
  for (const auto& [deg, c] : o.coeffs_) set(deg, coeff(deg) - c);
  return *this;
}

FormalPoly FormalPoly::operator-() const {
  FormalPoly p;
  for (const auto& [deg, c] : coeffs_) p.coeffs_[deg] = -c;
  return p;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
  FormalPoly p;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) p.set(da + db, p.coeff(da + db) + ca * cb);
  return p;
}

FormalPoly operator*(FormalPoly a, const RationalFn& c) {
  FormalPoly p;
  for (const auto& [deg, x] : a.coeffs_) p.set(deg, x * c);
  return p;
}

RationalFn FormalPoly::evaluate(const RationalFn& at) const {
  RationalFn acc;
  int deg = degree();
  for (; deg >= 0; --deg) acc = acc * at + coeff(deg);
  return acc;
}

namespace {

std::string render(const std::map<int, RationalFn>& coeffs, const std::string& var, bool latex) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    const int deg = it->first;
    const RationalFn& c = it->second;
    std::string cs = latex ? c.latex() : c.str();
    const bool simple_const = c.is_polynomial() && c.num().is_constant();
    bool neg = false;
    if (simple_const && c.num().leading_coeff() < 0) {
      neg = true;
      cs = (-c).str();
    }
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << '-';
    first = false;
    std::string mono;
    if (deg > 0) {
      mono = var;
      if (deg > 1) mono += latex ? "^{" + std::to_string(deg) + "}" : "^" + std::to_string(deg);
    }
    if (deg == 0) {
      os << (simple_const || latex ? cs : "(" + cs + ")");
    } else if (simple_const && cs == "1") {
      os << mono;
    } else if (simple_const) {
      os << cs << (latex ? "" : "*") << mono;
    } else {
      os << (latex ? "\\left(" + cs + "\\right)" : "(" + cs + ")*") << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string FormalPoly::str(const std::string& var) const { return render(coeffs_, var, false); }
std::string FormalPoly::latex(const std::string& var) const { return render(coeffs_, var, true); }

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

LaurentPoly quantum_int(int n) {
  if (n < 0) throw std::invalid_argument("quantum_int: n must be >= 0");
  LaurentPoly p;
  for (int i = 0; i < n; ++i) p += LaurentPoly::A(4 * i);
  return p;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: n must be >= 0");
  LaurentPoly p(1);
  for (int i = 1; i <= n; ++i) p *= quantum_int(i);
  return p;
}

LaurentPoly delta(int n) {
  if (n < 0) throw std::invalid_argument("delta: n must be >= 0");
  LaurentPoly p = quantum_int(n + 1).shifted(-2 * n);
  return n % 2 == 0 ? p : -p;
}

FormalPoly chebyshev(ChebyshevKind kind, int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: n must be >= 0");
  FormalPoly prev(RationalFn(kind == ChebyshevKind::First ? 2 : 1));
  if (n == 0) return prev;
  const FormalPoly d = FormalPoly::variable(1);
  FormalPoly cur = d;
  for (int k = 2; k <= n; ++k) {
    FormalPoly next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly varsigma(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("varsigma: a and b must be >= 0");
  const int e = 2 * (b + 1) * (a + 1);
  const int f = 2 * (b + 1);
  LaurentPoly num = LaurentPoly::A(e) - LaurentPoly::A(-e);
  LaurentPoly den = LaurentPoly::A(f) - LaurentPoly::A(-f);
  LaurentPoly q = divide_exact(num, den);
  return a % 2 == 0 ? q : -q;
}

}  // namespace skein
