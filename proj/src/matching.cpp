#include "skein/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

// Position index -> 0-based cyclic boundary index.
int cyclic_index(int left, int right, int pos) {
  return pos < left ? pos : left + (right - 1 - (pos - left));
}

bool crossing_free(int left, int right, const std::vector<std::int8_t>& partner) {
  // Walk the boundary in cyclic order; a planar matching closes pairs in
  // stack order.
  const int total = left + right;
  std::vector<int> at_cyc(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) at_cyc[static_cast<std::size_t>(cyclic_index(left, right, p))] = p;
  std::vector<int> stack;
  for (int c = 0; c < total; ++c) {
    const int p = at_cyc[static_cast<std::size_t>(c)];
    const int q = partner[static_cast<std::size_t>(p)];
    if (!stack.empty() && stack.back() == q) {
      stack.pop_back();
    } else {
      stack.push_back(p);
    }
  }
  return stack.empty();
}

void enumerate_cyclic(std::vector<int>& pairing, int lo, int hi, std::vector<std::vector<int>>& out,
                      std::vector<std::pair<int, int>>& pending) {
  // Match the points lo..hi-1 (cyclic indices), then continue with pending ranges.
  if (lo >= hi) {
    if (pending.empty()) {
      out.push_back(pairing);
      return;
    }
    auto [plo, phi] = pending.back();
    pending.pop_back();
    enumerate_cyclic(pairing, plo, phi, out, pending);
    pending.emplace_back(plo, phi);
    return;
  }
  for (int k = lo + 1; k < hi; k += 2) {
    pairing[static_cast<std::size_t>(lo)] = k;
    pairing[static_cast<std::size_t>(k)] = lo;
    pending.emplace_back(k + 1, hi);
    enumerate_cyclic(pairing, lo + 1, k, out, pending);
    pending.pop_back();
  }
}

}  // namespace

Matching::Matching(int left, int right, std::vector<std::int8_t> partner)
    : left_(left), right_(right), partner_(std::move(partner)) {
  if (left < 0 || right < 0 || static_cast<int>(partner_.size()) != left + right)
    throw std::invalid_argument("Matching: partner table has the wrong size");
  for (int p = 0; p < left + right; ++p) {
    const int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= left + right || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw std::invalid_argument("Matching: not a fixed-point-free involution");
  }
  if (!crossing_free(left, right, partner_)) throw std::invalid_argument("Matching: pairs cross");
}

Matching Matching::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: n must be >= 0");
  std::vector<std::int8_t> p(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    p[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(n + j);
    p[static_cast<std::size_t>(n + j)] = static_cast<std::int8_t>(j);
  }
  return Matching(n, n, std::move(p), Trusted{});
}

Matching Matching::generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("generator: need 1 <= i <= n-1");
  Matching m = identity(n);
  auto& p = m.partner_;
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(i);
  p[a] = static_cast<std::int8_t>(b);
  p[b] = static_cast<std::int8_t>(a);
  p[n + a] = static_cast<std::int8_t>(n + b);
  p[n + b] = static_cast<std::int8_t>(n + a);
  return m;
}

Matching Matching::from_boundary_pairs(int left, int right, const std::vector<std::pair<int, int>>& pairs) {
  const int total = left + right;
  std::vector<std::int8_t> p(static_cast<std::size_t>(total), -1);
  Matching shape(left, right, {}, Trusted{});
  for (auto [a, b] : pairs) {
    if (a < 1 || a > total || b < 1 || b > total) throw std::invalid_argument("Matching: boundary point out of range");
    const int pa = shape.position_of(a);
    const int pb = shape.position_of(b);
    if (p[static_cast<std::size_t>(pa)] != -1 || p[static_cast<std::size_t>(pb)] != -1)
      throw std::invalid_argument("Matching: boundary point used twice");
    p[static_cast<std::size_t>(pa)] = static_cast<std::int8_t>(pb);
    p[static_cast<std::size_t>(pb)] = static_cast<std::int8_t>(pa);
  }
  return Matching(left, right, std::move(p));
}

int Matching::strands() const {
  if (!is_square()) throw std::logic_error("Matching: not a square diagram");
  return left_;
}

int Matching::boundary_point(int position) const {
  return position < left_ ? position + 1 : left_ + (right_ - (position - left_));
}

int Matching::position_of(int point) const {
  return point <= left_ ? point - 1 : left_ + (right_ - (point - left_));
}

std::vector<std::pair<int, int>> Matching::boundary_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < size(); ++p) {
    const int a = boundary_point(p);
    const int b = boundary_point(partner(p));
    if (a < b) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Matching::through_strands() const {
  int t = 0;
  for (int p = 0; p < left_; ++p)
    if (partner(p) >= left_) ++t;
  return t;
}

Matching Matching::with_strands_below(int k) const {
  const int nl = left_ + k;
  const int nr = right_ + k;
  std::vector<std::int8_t> p(static_cast<std::size_t>(nl + nr));
  auto remap = [&](int pos) { return pos < left_ ? pos : pos + k; };
  for (int pos = 0; pos < size(); ++pos) p[static_cast<std::size_t>(remap(pos))] = static_cast<std::int8_t>(remap(partner(pos)));
  for (int j = 0; j < k; ++j) {
    const int a = left_ + j;
    const int b = nl + right_ + j;
    p[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
    p[static_cast<std::size_t>(b)] = static_cast<std::int8_t>(a);
  }
  return Matching(nl, nr, std::move(p), Trusted{});
}

Matching Matching::with_strands_above(int k) const {
  const int nl = left_ + k;
  const int nr = right_ + k;
  std::vector<std::int8_t> p(static_cast<std::size_t>(nl + nr));
  auto remap = [&](int pos) { return pos < left_ ? pos + k : pos + 2 * k; };
  for (int pos = 0; pos < size(); ++pos) p[static_cast<std::size_t>(remap(pos))] = static_cast<std::int8_t>(remap(partner(pos)));
  for (int j = 0; j < k; ++j) {
    const int a = j;
    const int b = nl + j;
    p[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
    p[static_cast<std::size_t>(b)] = static_cast<std::int8_t>(a);
  }
  return Matching(nl, nr, std::move(p), Trusted{});
}

std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
  if (auto c = a.left_ <=> b.left_; c != 0) return c;
  if (auto c = a.right_ <=> b.right_; c != 0) return c;
  return a.partner_ <=> b.partner_;
}

std::string Matching::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [a, b] : boundary_pairs()) {
    if (!first) os << ", ";
    first = false;
    os << a << "-" << b;
  }
  os << '}';
  return os.str();
}

std::size_t Matching::hash() const {
  std::size_t h = static_cast<std::size_t>(left_) * 131 + static_cast<std::size_t>(right_);
  for (auto v : partner_) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

Composition compose(const Matching& a, const Matching& b) {
  if (a.right_ != b.left_) throw std::invalid_argument("compose: widths do not agree");
  const int al = a.left_;
  const int mid = a.right_;
  const int br = b.right_;
  std::vector<std::int8_t> out(static_cast<std::size_t>(al + br), -1);
  std::vector<char> seen(static_cast<std::size_t>(mid), 0);

  // Follow a strand from an outer endpoint.  side 0 = inside a, side 1 = inside b;
  // `pos` is the position we have just arrived at.
  auto follow = [&](int side, int pos) -> int {
    for (;;) {
      if (side == 0) {
        if (pos < al) return pos;
        const int j = pos - al;
        seen[static_cast<std::size_t>(j)] = 1;
        pos = b.partner(j);
        side = 1;
      } else {
        if (pos >= mid) return al + (pos - mid);
        seen[static_cast<std::size_t>(pos)] = 1;
        pos = a.partner(al + pos);
        side = 0;
      }
    }
  };

  for (int p = 0; p < al; ++p) {
    if (out[static_cast<std::size_t>(p)] != -1) continue;
    const int q = follow(0, a.partner(p));
    out[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(q);
    out[static_cast<std::size_t>(q)] = static_cast<std::int8_t>(p);
  }
  for (int p = 0; p < br; ++p) {
    const int r = al + p;
    if (out[static_cast<std::size_t>(r)] != -1) continue;
    const int q = follow(1, b.partner(mid + p));
    out[static_cast<std::size_t>(r)] = static_cast<std::int8_t>(q);
    out[static_cast<std::size_t>(q)] = static_cast<std::int8_t>(r);
  }
  int loops = 0;
  for (int j = 0; j < mid; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++loops;
    int k = j;
    do {
      seen[static_cast<std::size_t>(k)] = 1;
      k = b.partner(k);           // across b, lands on b's left side
      seen[static_cast<std::size_t>(k)] = 1;
      k = a.partner(al + k) - al;  // across a, back to the interface
    } while (k != j);
  }
  return {Matching(al, br, std::move(out), Matching::Trusted{}), loops};
}

std::vector<Matching> enumerate_planar(int left, int right) {
  if (left < 0 || right < 0) throw std::invalid_argument("enumerate_planar: negative side");
  const int total = left + right;
  std::vector<Matching> result;
  if (total % 2 != 0) return result;
  std::vector<std::vector<int>> cyc;
  std::vector<int> pairing(static_cast<std::size_t>(total), -1);
  std::vector<std::pair<int, int>> pending;
  enumerate_cyclic(pairing, 0, total, cyc, pending);
  // cyclic index -> position index
  std::vector<int> pos_of(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) pos_of[static_cast<std::size_t>(cyclic_index(left, right, p))] = p;
  result.reserve(cyc.size());
  for (const auto& c : cyc) {
    std::vector<std::int8_t> partner(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i)
      partner[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(i)])] =
          static_cast<std::int8_t>(pos_of[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])]);
    result.push_back(MatchingBuilder::trusted(left, right, std::move(partner)));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Matching> enumerate_matchings(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_matchings: n must be >= 0");
  return enumerate_planar(n, n);
}

bool is_noncrossing(const std::vector<std::pair<int, int>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (a > b) std::swap(a, b);
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [c, d] = pairs[j];
      if (c > d) std::swap(c, d);
      const bool c_in = a < c && c < b;
      const bool d_in = a < d && d < b;
      if (c_in != d_in) return false;
    }
  }
  return true;
}

}  // namespace skein
