#pragma once

// Kronecker substitution helpers: a Laurent polynomial with exponents in an
// arithmetic progression low, low+stride, ... is packed into one big integer
// by evaluating at 2^bits.  Products and sums of packed values are exact as
// long as every coefficient of the final result fits in bits-1 bits (signed),
// so callers size `bits` from an a priori L1 bound.

#include <gmpxx.h>

#include <vector>

#include "skein/laurent_poly.hpp"

namespace skein::detail {

struct PackLayout {
  int low = 0;
  int stride = 1;
};

/// Lowest exponent and common exponent stride of a family of polynomials.
PackLayout layout_of(const std::vector<LaurentPoly>& polys);
/// Stride that works for two layouts combined (their exponents may differ by
/// the lows, which get added).
int common_stride(int a, int b);

mpz_class pack(const LaurentPoly& p, const PackLayout& layout, unsigned bits);
LaurentPoly unpack(const mpz_class& v, const PackLayout& layout, unsigned bits);

/// Bits needed so that integers of absolute value <= bound round-trip.
unsigned bits_for(const mpz_class& bound);

}  // namespace skein::detail
