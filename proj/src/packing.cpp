#include "packing.hpp"

#include <numeric>

namespace skein::detail {

PackLayout layout_of(const std::vector<LaurentPoly>& polys) {
  PackLayout out;
  bool any = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    out.low = any ? std::min(out.low, p.low_degree()) : p.low_degree();
    any = true;
  }
  int g = 0;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    const auto& c = p.dense();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) g = std::gcd(g, p.low_degree() + static_cast<int>(i) - out.low);
  }
  out.stride = g == 0 ? 1 : g;
  return out;
}

int common_stride(int a, int b) { return std::gcd(a, b); }

mpz_class pack(const LaurentPoly& p, const PackLayout& layout, unsigned bits) {
  mpz_class v = 0;
  if (p.is_zero()) return v;
  const auto& c = p.dense();
  for (std::size_t i = c.size(); i-- > 0;) {
    const int e = p.low_degree() + static_cast<int>(i);
    if ((e - layout.low) % layout.stride != 0) continue;
    v <<= bits;
    v += c[i];
  }
  // Horner ran from the top digit down to p's own lowest digit.
  const int lowest_digit = (p.low_degree() - layout.low) / layout.stride;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(lowest_digit) * bits);
  return v;
}

LaurentPoly unpack(const mpz_class& value, const PackLayout& layout, unsigned bits) {
  std::vector<std::pair<int, mpz_class>> terms;
  mpz_class v = value;
  mpz_class digit;
  mpz_class half = 1;
  half <<= bits - 1;
  int index = 0;
  while (v != 0) {
    mpz_fdiv_r_2exp(digit.get_mpz_t(), v.get_mpz_t(), bits);
    if (digit >= half) digit -= half * 2;
    if (digit != 0) terms.emplace_back(layout.low + index * layout.stride, digit);
    v -= digit;
    v >>= bits;
    ++index;
  }
  return LaurentPoly::from_terms(terms);
}

unsigned bits_for(const mpz_class& bound) {
  return static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2)) + 2;
}

}  // namespace skein::detail
