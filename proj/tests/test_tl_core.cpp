#include <map>
#include <set>
#include <numeric>
#include <random>

#include "doctest.h"
#include "skein/quantum.hpp"
#include "skein/tl_element.hpp"

using namespace skein;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// Glue two square diagrams given only by boundary pairs, with a union-find
// over the 4n endpoints.  Returns outer pairs and the number of closed loops.
std::pair<Pairs, int> glue_by_union_find(int n, const Pairs& x, const Pairs& y) {
  // node ids: x point p -> p-1, y point p -> 2n + p-1
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (auto [a, b] : x) unite(a - 1, b - 1);
  for (auto [a, b] : y) unite(2 * n + a - 1, 2 * n + b - 1);
  // x's right side, top to bottom, is points 2n, 2n-1, ..., n+1; y's left is 1..n.
  for (int j = 0; j < n; ++j) unite(2 * n - 1 - j, 2 * n + j);
  // outer points: x left 1..n become 1..n; y right n+1..2n keep their labels.
  std::map<int, std::vector<int>> comp;
  for (int p = 1; p <= n; ++p) comp[find(p - 1)].push_back(p);
  for (int p = n + 1; p <= 2 * n; ++p) comp[find(2 * n + p - 1)].push_back(p);
  Pairs out;
  for (auto& [r, pts] : comp) {
    REQUIRE(pts.size() == 2);
    out.emplace_back(std::min(pts[0], pts[1]), std::max(pts[0], pts[1]));
  }
  std::sort(out.begin(), out.end());
  std::set<int> roots;
  for (int v = 0; v < 4 * n; ++v) roots.insert(find(v));
  return {out, static_cast<int>(roots.size()) - n};
}

long catalan(int n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("generators use the boundary convention") {
  CHECK(Matching::identity(2).boundary_pairs() == Pairs{{1, 4}, {2, 3}});
  CHECK(Matching::generator(2, 1).boundary_pairs() == Pairs{{1, 2}, {3, 4}});
  CHECK(Matching::generator(3, 2).boundary_pairs() == Pairs{{1, 6}, {2, 3}, {4, 5}});
  CHECK_THROWS(Matching::generator(3, 0));
  CHECK_THROWS(Matching::generator(3, 3));
  CHECK_THROWS(Matching::from_boundary_pairs(2, 2, {{1, 3}, {2, 4}}));
  CHECK(Matching::from_boundary_pairs(3, 3, {{1, 6}, {2, 3}, {4, 5}}) == Matching::generator(3, 2));
}

TEST_CASE("matching counts are Catalan numbers") {
  CHECK(enumerate_matchings(0).size() == 1);
  CHECK(enumerate_matchings(3).size() == 5);
  for (int n = 0; n <= 10; ++n) {
    const auto all = enumerate_matchings(n);
    CHECK(static_cast<long>(all.size()) == catalan(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& m : all) CHECK(is_noncrossing(m.boundary_pairs()));
  }
  CHECK(enumerate_planar(1, 3).size() == 2);
  CHECK(enumerate_planar(0, 6).size() == 5);
  CHECK(enumerate_planar(2, 1).empty());
}

TEST_CASE("composition agrees with union-find gluing") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_matchings(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const Composition c = compose(a, b);
        const auto [pairs, loops] = glue_by_union_find(n, a.boundary_pairs(), b.boundary_pairs());
        CHECK(c.result.boundary_pairs() == pairs);
        CHECK(c.loops == loops);
      }
  }
}

TEST_CASE("e3 squared is d e3") {
  const TLElement e3 = TLElement::generator(4, 3);
  CHECK(e3 * e3 == RationalFn(loop_value()) * e3);
}

TEST_CASE("defining relations for small n") {
  const RationalFn d = loop_value();
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      const TLElement ei = TLElement::generator(n, i);
      CHECK(ei * ei == d * ei);
      for (int j = 1; j < n; ++j) {
        const TLElement ej = TLElement::generator(n, j);
        if (std::abs(i - j) == 1) CHECK(ei * ej * ei == ei);
        if (std::abs(i - j) > 1) CHECK(ei * ej == ej * ei);
      }
    }
}

TEST_CASE("element arithmetic") {
  const TLElement e1 = TLElement::generator(2, 1), one = TLElement::identity(2);
  CHECK((e1 * RationalFn(0)).is_zero());
  CHECK((e1 + (-e1)).is_zero());
  CHECK((e1 + one).size() == 2);
  CHECK_THROWS(e1 + TLElement::identity(3));
  CHECK_THROWS(e1 * TLElement::identity(3));
}

TEST_CASE("multiplication is associative with a unit on random combinations") {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_matchings(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> co(-3, 3);
    auto random_element = [&] {
      TLElement x(n, n);
      for (int k = 0; k < 3; ++k)
        x.add_term(all[pick(rng)], RationalFn(LaurentPoly::A(2 * co(rng)) * mpz_class(co(rng)), LaurentPoly::A(4) + LaurentPoly(co(rng) == 0 ? 2 : 1)));
      return x;
    };
    for (int it = 0; it < 15; ++it) {
      const TLElement x = random_element(), y = random_element(), z = random_element();
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(TLElement::identity(n) * x == x);
      CHECK(x * TLElement::identity(n) == x);
    }
    for (const auto& a : all)
      for (const auto& b : all) CHECK((TLElement(a) * TLElement(b)).size() == 1);
  }
}

TEST_CASE("strands appended below and above") {
  const TLElement e1 = TLElement::generator(2, 1);
  CHECK(e1.with_strands_below(1) == TLElement::generator(3, 1));
  CHECK(e1.with_strands_above(1) == TLElement::generator(3, 2));
  CHECK(TLElement::identity(2).with_strands_below(2) == TLElement::identity(4));
}
