#include "skein/rational_fn.hpp"

#include "skein/errors.hpp"

namespace skein {

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalise();
}

void RationalFn::canonicalise() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    const LaurentPoly g = gcd(num_, den_);
    if (!(g == LaurentPoly(1))) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  } else {
    // Monomial denominator c*A^k: only the integer content can cancel.
    mpz_class g;
    const mpz_class nc = num_.content();
    mpz_gcd(g.get_mpz_t(), nc.get_mpz_t(), den_.leading_coeff().get_mpz_t());
    if (g != 1) {
      num_ = num_.divided_by(g);
      den_ = den_.divided_by(g);
    }
  }
  const int k = den_.low_degree();
  if (k != 0) {
    num_ = num_.shifted(-k);
    den_ = den_.shifted(-k);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(A)");
  return RationalFn(den_, num_);
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_ == LaurentPoly(1)) return *this;
    canonicalise();
    return *this;
  }
  if (o.is_polynomial()) {
    num_.add_product(o.num_, den_);
    canonicalise();
    return *this;
  }
  if (is_polynomial()) {
    LaurentPoly n = o.num_;
    n.add_product(num_, o.den_);
    num_ = std::move(n);
    den_ = o.den_;
    canonicalise();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g)).
  const LaurentPoly g = gcd(den_, o.den_);
  const LaurentPoly bg = divide_exact(den_, g);
  const LaurentPoly dg = divide_exact(o.den_, g);
  LaurentPoly n = num_ * dg;
  n.add_product(o.num_, bg);
  num_ = std::move(n);
  den_ = den_ * dg;
  canonicalise();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_, Canonical{}); }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying so the final gcd works on smaller inputs.
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_monomial()) {
    const LaurentPoly g1 = gcd(a, d);
    if (!(g1 == LaurentPoly(1))) {
      a = divide_exact(a, g1);
      d = divide_exact(d, g1);
    }
  }
  if (!b.is_monomial()) {
    const LaurentPoly g2 = gcd(c, b);
    if (!(g2 == LaurentPoly(1))) {
      c = divide_exact(c, g2);
      b = divide_exact(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  canonicalise();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFn(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

std::strong_ordering operator<=>(const RationalFn& a, const RationalFn& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

std::string RationalFn::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string RationalFn::latex() const {
  if (is_polynomial()) return num_.latex();
  return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

}  // namespace skein
