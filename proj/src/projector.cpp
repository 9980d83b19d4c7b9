#include "skein/projector.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "skein/errors.hpp"
#include "skein/quantum.hpp"

namespace skein {

namespace {

void check_permutation(const Permutation& pi) {
  std::vector<char> seen(pi.size() + 1, 0);
  for (int v : pi) {
    if (v < 1 || v > static_cast<int>(pi.size()) || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Elementary rectangular diagrams.  Positions are 1-based from the top.
Matching cap_diagram(int w, int p) {
  std::vector<std::int8_t> partner(static_cast<std::size_t>(2 * w - 2));
  const int right0 = w;
  int r = 0;
  for (int j = 0; j < w; ++j) {
    if (j == p - 1) {
      partner[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(j + 1);
      partner[static_cast<std::size_t>(j + 1)] = static_cast<std::int8_t>(j);
      ++j;
      continue;
    }
    partner[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(right0 + r);
    partner[static_cast<std::size_t>(right0 + r)] = static_cast<std::int8_t>(j);
    ++r;
  }
  return MatchingBuilder::trusted(w, w - 2, std::move(partner));
}

Matching cup_diagram(int w, int p) {
  std::vector<std::int8_t> partner(static_cast<std::size_t>(2 * w + 2));
  const int right0 = w;
  int l = 0;
  for (int j = 0; j < w + 2; ++j) {
    if (j == p - 1) {
      partner[static_cast<std::size_t>(right0 + j)] = static_cast<std::int8_t>(right0 + j + 1);
      partner[static_cast<std::size_t>(right0 + j + 1)] = static_cast<std::int8_t>(right0 + j);
      ++j;
      continue;
    }
    partner[static_cast<std::size_t>(right0 + j)] = static_cast<std::int8_t>(l);
    partner[static_cast<std::size_t>(l)] = static_cast<std::int8_t>(right0 + j);
    ++l;
  }
  return MatchingBuilder::trusted(w, w + 2, std::move(partner));
}

TLElement crossing_element(int w, int p, int sign) {
  const LaurentPoly a = LaurentPoly::A(sign > 0 ? 1 : -1);
  TLElement x(Matching::identity(w), RationalFn(a));
  x.add_term(Matching::generator(w, p), RationalFn(LaurentPoly::A(sign > 0 ? -1 : 1)));
  return x;
}

TLElement slice_element(const Slice& s, int w) {
  switch (s.kind) {
    case Slice::Kind::Cap:
      return TLElement(cap_diagram(w, s.position));
    case Slice::Kind::Cup:
      return TLElement(cup_diagram(w, s.position));
    case Slice::Kind::Crossing:
      return crossing_element(w, s.position, s.param);
    case Slice::Kind::Projector:
      return jones_wenzl(s.param).with_strands_above(s.position - 1).with_strands_below(w - s.position - s.param + 1);
  }
  throw InternalError("unknown slice kind");
}

int width_after(const Slice& s, int w) {
  switch (s.kind) {
    case Slice::Kind::Cap:
      return w - 2;
    case Slice::Kind::Cup:
      return w + 2;
    default:
      return w;
  }
}

}  // namespace

int inversion_count(const Permutation& pi) {
  check_permutation(pi);
  int inv = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = i + 1; j < pi.size(); ++j)
      if (pi[i] > pi[j]) ++inv;
  return inv;
}

Permutation underlying_permutation(const BraidWord& w) {
  // at[p] = strand currently at position p
  std::vector<int> at(static_cast<std::size_t>(w.n));
  std::iota(at.begin(), at.end(), 1);
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    if (i < 1 || i >= w.n) throw std::out_of_range("braid letter out of range");
    std::swap(at[static_cast<std::size_t>(i - 1)], at[static_cast<std::size_t>(i)]);
  }
  Permutation pi(static_cast<std::size_t>(w.n));
  for (int p = 0; p < w.n; ++p) pi[static_cast<std::size_t>(at[static_cast<std::size_t>(p)] - 1)] = p + 1;
  return pi;
}

BraidWord permutation_braid(const Permutation& pi) {
  check_permutation(pi);
  // Sort the target positions with adjacent swaps; each swap is one letter.
  std::vector<int> target = pi;
  BraidWord w{static_cast<int>(pi.size()), {}};
  for (int k = 1; k < w.n; ++k)
    for (int j = k; j > 0 && target[static_cast<std::size_t>(j - 1)] > target[static_cast<std::size_t>(j)]; --j) {
      std::swap(target[static_cast<std::size_t>(j - 1)], target[static_cast<std::size_t>(j)]);
      w.letters.push_back(j);
    }
  return w;
}

BraidWord permutation_braid_selection(const Permutation& pi) {
  check_permutation(pi);
  std::vector<int> target = pi;
  BraidWord w{static_cast<int>(pi.size()), {}};
  for (int t = 1; t <= w.n; ++t) {
    int p = static_cast<int>(std::find(target.begin(), target.end(), t) - target.begin());
    for (; p > t - 1; --p) {
      std::swap(target[static_cast<std::size_t>(p - 1)], target[static_cast<std::size_t>(p)]);
      w.letters.push_back(p);
    }
  }
  return w;
}

SliceWord& SliceWord::cap(int p) {
  if (p < 1 || p + 1 > width_) throw std::out_of_range("cap position out of range");
  slices_.push_back({Slice::Kind::Cap, p, 0});
  width_ -= 2;
  return *this;
}

SliceWord& SliceWord::cup(int p) {
  if (p < 1 || p > width_ + 1) throw std::out_of_range("cup position out of range");
  slices_.push_back({Slice::Kind::Cup, p, 0});
  width_ += 2;
  return *this;
}

SliceWord& SliceWord::cross(int p, int sign) {
  if (p < 1 || p + 1 > width_) throw std::out_of_range("crossing position out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  slices_.push_back({Slice::Kind::Crossing, p, sign});
  return *this;
}

SliceWord& SliceWord::projector(int p, int k) {
  if (k < 1 || p < 1 || p + k - 1 > width_) throw std::out_of_range("projector does not fit");
  slices_.push_back({Slice::Kind::Projector, p, k});
  return *this;
}

TLElement resolve(const SliceWord& word) {
  int w = word.width_in();
  TLElement state = TLElement::identity(w);
  for (const Slice& s : word.slices()) {
    state = state * slice_element(s, w);
    w = width_after(s, w);
  }
  return state;
}

TLElement resolve(const BraidWord& word) {
  SliceWord s(word.n);
  for (int letter : word.letters) s.cross(std::abs(letter), letter > 0 ? 1 : -1);
  return resolve(s);
}

const TLElement& jones_wenzl(int n) {
  if (n < 1) throw std::invalid_argument("jones_wenzl: n must be >= 1");
  static std::mutex mutex;
  static std::deque<TLElement> cache;  // cache[k] = f_{k+1}; deque keeps references stable
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) cache.push_back(TLElement::identity(1));
  while (static_cast<int>(cache.size()) < n) {
    const int m = static_cast<int>(cache.size()) + 1;
    const TLElement g = cache.back().with_strands_below(1);
    const RationalFn ratio(delta(m - 2), delta(m - 1));
    TLElement next = g - ratio * (g * TLElement::generator(m, m - 1) * g);
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

TLElement jones_wenzl_constructive(int n) {
  if (n < 1) throw std::invalid_argument("jones_wenzl_constructive: n must be >= 1");
  if (n > 7) throw ResourceLimit("jones_wenzl_constructive: n! braid resolutions, n <= 7 supported");
  std::vector<TLElement> sigma;  // resolved sigma_i, cached per call
  for (int i = 1; i < n; ++i) sigma.push_back(crossing_element(n, i, 1));
  Permutation pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  TLElement sum(n, n);
  do {
    const BraidWord b = permutation_braid(pi);
    TLElement term = TLElement::identity(n);
    for (int letter : b.letters) term = term * sigma[static_cast<std::size_t>(letter - 1)];
    sum += RationalFn(LaurentPoly::A(3 * b.length())) * term;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return sum * RationalFn(LaurentPoly(1), quantum_factorial(n));
}

TLElement partial_trace_top(const TLElement& x) {
  const int n = x.strands();
  if (n < 1) throw std::invalid_argument("partial_trace_top: need at least one strand");
  const int closed_left = n - 1;
  const int closed_right = 2 * n - 1;
  TLElement out(n - 1, n - 1);
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::int8_t> partner(static_cast<std::size_t>(2 * n - 2));
    auto new_index = [&](int pos) { return pos < n ? pos : pos - 1; };
    auto other_end = [&](int pos) {
      int q = m.partner(pos);
      if (q == closed_left) q = m.partner(closed_right);
      else if (q == closed_right) q = m.partner(closed_left);
      return q;
    };
    for (int pos = 0; pos < 2 * n; ++pos) {
      if (pos == closed_left || pos == closed_right) continue;
      partner[static_cast<std::size_t>(new_index(pos))] = static_cast<std::int8_t>(new_index(other_end(pos)));
    }
    const bool loop = m.partner(closed_left) == closed_right;
    out.add_term(MatchingBuilder::trusted(n - 1, n - 1, std::move(partner)), loop ? c * RationalFn(loop_value()) : c);
  }
  return out;
}

TLElement encircle(int a, const TLElement& x) {
  const int b = x.strands();
  if (a < 0) throw std::invalid_argument("encircle: a must be >= 0");
  if (a == 0) return x;
  if (2 * a + b > 14) throw ResourceLimit("encircle: loop and bundle too wide for the state sum");
  SliceWord w(b);
  for (int i = 0; i < a; ++i) w.cup(b + 1 + i);
  w.projector(b + 1, a);
  // Lift the upper half of the loop over the bundle, one cable strand at a time ...
  for (int s = 0; s < a; ++s)
    for (int p = b + s; p >= s + 1; --p) w.cross(p, 1);
  // ... and bring it back down on the other side, crossing the same way so
  // that it links the bundle instead of cancelling.
  for (int s = a; s >= 1; --s)
    for (int p = s; p <= s + b - 1; ++p) w.cross(p, 1);
  for (int i = 0; i < a; ++i) w.cap(b + a - i);
  return x * resolve(w);
}

}  // namespace skein
