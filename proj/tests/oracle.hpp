#pragma once

// Deliberately naive reference arithmetic used to cross-check the library.
// Polynomials are plain exponent -> coefficient maps; nothing here shares
// code with src/.

#include <gmpxx.h>

#include <map>
#include <random>

#include "skein/laurent_poly.hpp"
#include "skein/rational_fn.hpp"

namespace oracle {

using Poly = std::map<int, mpz_class>;

inline Poly normalise(Poly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) r[e] += c;
  return normalise(r);
}

inline Poly neg(const Poly& a) {
  Poly r;
  for (const auto& [e, c] : a) r[e] = -c;
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  return normalise(r);
}

inline Poly from(const skein::LaurentPoly& p) {
  Poly r;
  for (const auto& [e, c] : p.terms()) r[e] = c;
  return r;
}

inline skein::LaurentPoly to(const Poly& p) {
  std::vector<std::pair<int, mpz_class>> t(p.begin(), p.end());
  return skein::LaurentPoly::from_terms(t);
}

/// Exact value of a Laurent polynomial at a rational point.
inline mpq_class eval(const Poly& p, const mpq_class& at) {
  mpq_class r = 0;
  for (const auto& [e, c] : p) {
    mpq_class pw = 1;
    const mpq_class base = e >= 0 ? at : mpq_class(1) / at;
    for (int i = 0; i < std::abs(e); ++i) pw *= base;
    r += pw * mpq_class(c);
  }
  return r;
}

inline mpq_class eval(const skein::RationalFn& f, const mpq_class& at) {
  return eval(from(f.num()), at) / eval(from(f.den()), at);
}

inline Poly random_poly(std::mt19937_64& rng, int max_terms = 5, int span = 6, int coef = 9) {
  std::uniform_int_distribution<int> nt(0, max_terms), ex(-span, span), co(-coef, coef);
  Poly p;
  const int k = nt(rng);
  for (int i = 0; i < k; ++i) p[ex(rng)] += co(rng);
  return normalise(p);
}

}  // namespace oracle
