#include <random>

#include "doctest.h"
#include "skein/annulus.hpp"
#include "skein/projector.hpp"

using namespace skein;

namespace {
TLElement e(int n, int i) { return TLElement::generator(n, i); }
const FormalPoly z = FormalPoly::variable(1);
}  // namespace

TEST_CASE("disk closure of simple diagrams") {
  const RationalFn d = loop_value();
  for (int n = 0; n <= 4; ++n) CHECK(close_disk(TLElement::identity(n)) == d.pow(n));
  CHECK(close_disk(e(2, 1)) == d);
  CHECK(close_disk(e(3, 1) * e(3, 2)) == d);
  CHECK(close_disk(TLElement(3, 3)).is_zero());
}

TEST_CASE("annular closure of simple diagrams") {
  for (int n = 0; n <= 4; ++n) CHECK(close_annulus(TLElement::identity(n)) == FormalPoly::variable(n));
  // S_2 = z^2 - 1 = closure(1) - closure(e1)/d forces closure(e1) = d.
  CHECK(close_annulus(e(2, 1)) == FormalPoly(RationalFn(loop_value())));
  CHECK(close_annulus(e(3, 1)) == z * RationalFn(loop_value()));
}

TEST_CASE("projector closures for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(close_disk(jones_wenzl(n)) == RationalFn(delta(n)));
    CHECK(close_annulus(jones_wenzl(n)) == chebyshev(ChebyshevKind::Second, n));
  }
}

TEST_CASE("annular closure specialises to the disk closure and is a trace") {
  std::mt19937_64 rng(2024);
  const RationalFn d = loop_value();
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_matchings(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int it = 0; it < 10; ++it) {
      TLElement x(n, n), y(n, n);
      for (int k = 0; k < 3; ++k) {
        x.add_term(all[pick(rng)], RationalFn(LaurentPoly::A(k) + LaurentPoly(k)));
        y.add_term(all[pick(rng)], RationalFn(LaurentPoly(1), LaurentPoly::A(2 * k) + LaurentPoly(1)));
      }
      CHECK(close_annulus(x).evaluate(d) == close_disk(x));
      CHECK(close_annulus(x * y) == close_annulus(y * x));
      CHECK(close_disk(x * y) == close_disk(y * x));
    }
  }
}
