#include "skein/tl_element.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "packing.hpp"
#include "skein/quantum.hpp"

namespace skein {

TLElement::TLElement(const Matching& m, RationalFn c) : left_(m.left()), right_(m.right()) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

TLElement TLElement::identity(int n) { return TLElement(Matching::identity(n)); }

TLElement TLElement::generator(int n, int i) { return TLElement(Matching::generator(n, i)); }

int TLElement::strands() const {
  if (!is_square()) throw std::logic_error("TLElement: not a square element");
  return left_;
}

RationalFn TLElement::coeff(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFn() : it->second;
}

void TLElement::add_term(const Matching& m, const RationalFn& c) {
  if (m.left() != left_ || m.right() != right_) throw std::invalid_argument("TLElement: diagram shape mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.left_ != left_ || o.right_ != right_) throw std::invalid_argument("TLElement: shape mismatch in sum");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  if (o.left_ != left_ || o.right_ != right_) throw std::invalid_argument("TLElement: shape mismatch in difference");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TLElement& TLElement::operator*=(const RationalFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TLElement TLElement::operator-() const {
  TLElement r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

namespace {

struct Cleared {
  LaurentPoly den;
  std::vector<const Matching*> diagrams;
  std::vector<LaurentPoly> nums;
};

// Rewrite the coefficients over one common denominator.
Cleared clear_denominators(const TLElement& x) {
  Cleared out;
  out.den = LaurentPoly(1);
  for (const auto& [m, c] : x.terms()) {
    if (c.is_polynomial() || c.den() == out.den) continue;
    const LaurentPoly g = gcd(out.den, c.den());
    out.den *= divide_exact(c.den(), g);
  }
  for (const auto& [m, c] : x.terms()) {
    out.diagrams.push_back(&m);
    out.nums.push_back(c.num() * divide_exact(out.den, c.den()));
  }
  return out;
}

}  // namespace

TLElement operator*(const TLElement& x, const TLElement& y) {
  if (x.right_ != y.left_) throw std::invalid_argument("TLElement: multiplying elements of incompatible width");
  TLElement result(x.left_, y.right_);
  if (x.is_zero() || y.is_zero()) return result;

  const Cleared cx = clear_denominators(x);
  const Cleared cy = clear_denominators(y);
  detail::PackLayout lx = detail::layout_of(cx.nums);
  detail::PackLayout ly = detail::layout_of(cy.nums);
  const int stride = detail::common_stride(lx.stride, ly.stride);
  lx.stride = ly.stride = stride;

  mpz_class sx = 0, sy = 0;
  for (const auto& p : cx.nums) sx += p.l1_norm();
  for (const auto& p : cy.nums) sy += p.l1_norm();
  // Every accumulated coefficient is bounded by sx * sy.
  const unsigned bits = detail::bits_for(sx * sy);

  std::vector<mpz_class> px, py;
  px.reserve(cx.nums.size());
  py.reserve(cy.nums.size());
  for (const auto& p : cx.nums) px.push_back(detail::pack(p, lx, bits));
  for (const auto& p : cy.nums) py.push_back(detail::pack(p, ly, bits));

  // acc[diagram][k]: packed sum of coefficient products that closed k loops.
  std::unordered_map<Matching, std::vector<mpz_class>, MatchingHash> acc;
  for (std::size_t i = 0; i < px.size(); ++i) {
    for (std::size_t j = 0; j < py.size(); ++j) {
      Composition c = compose(*cx.diagrams[i], *cy.diagrams[j]);
      auto& slot = acc[std::move(c.result)];
      if (slot.size() <= static_cast<std::size_t>(c.loops)) slot.resize(static_cast<std::size_t>(c.loops) + 1);
      mpz_addmul(slot[static_cast<std::size_t>(c.loops)].get_mpz_t(), px[i].get_mpz_t(), py[j].get_mpz_t());
    }
  }

  const detail::PackLayout lxy{lx.low + ly.low, stride};
  const LaurentPoly den = cx.den * cy.den;
  std::vector<LaurentPoly> dpow{LaurentPoly(1)};
  for (auto& [m, slot] : acc) {
    LaurentPoly total;
    for (std::size_t k = 0; k < slot.size(); ++k) {
      if (slot[k] == 0) continue;
      while (dpow.size() <= k) dpow.push_back(dpow.back() * loop_value());
      total.add_product(detail::unpack(slot[k], lxy, bits), dpow[k]);
    }
    if (!total.is_zero()) result.terms_.emplace(m, RationalFn(std::move(total), den));
  }
  return result;
}

TLElement multiply(const TLElement& x, const TLElement& y) { return x * y; }

TLElement TLElement::with_strands_below(int k) const {
  TLElement r(left_ + k, right_ + k);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.with_strands_below(k), c);
  return r;
}

TLElement TLElement::with_strands_above(int k) const {
  TLElement r(left_ + k, right_ + k);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.with_strands_above(k), c);
  return r;
}

std::string TLElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")*" << m.str();
  }
  return os.str();
}

}  // namespace skein
