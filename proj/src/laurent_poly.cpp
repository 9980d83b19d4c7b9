#include "skein/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "skein/errors.hpp"

namespace skein {

namespace {

using Dense = std::vector<mpz_class>;

mpz_class content_of(const Dense& v) {
  mpz_class g = 0;
  for (const auto& c : v) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_all(Dense& v, const mpz_class& c) {
  if (c == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

void strip_high(Dense& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Makes v primitive with positive leading coefficient.
void normalise_primitive(Dense& v) {
  strip_high(v);
  if (v.empty()) return;
  mpz_class c = content_of(v);
  if (v.back() < 0) c = -c;
  divide_all(v, c);
}

// Polynomial division of ordinary polynomials (index = degree).  Returns the
// quotient if b divides a exactly over Z.
std::optional<Dense> poly_divide_exact(const Dense& a, const Dense& b) {
  if (b.empty()) throw DivisionByZero("division by the zero polynomial");
  if (a.empty()) return Dense{};
  if (a.size() < b.size()) return std::nullopt;
  // Cheap rejection on the constant terms.
  if (b.front() != 0 && a.front() != 0 && !mpz_divisible_p(a.front().get_mpz_t(), b.front().get_mpz_t()))
    return std::nullopt;
  Dense rem = a;
  const std::size_t db = b.size() - 1;
  const std::size_t dq = a.size() - b.size();
  Dense q(dq + 1);
  const mpz_class& lb = b.back();
  for (std::size_t i = dq + 1; i-- > 0;) {
    mpz_class& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      if (b[j] == 0) continue;
      mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < db; ++j)
    if (rem[j] != 0) return std::nullopt;
  return q;
}

// Pseudo-remainder of a by b (deg a >= deg b).
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[shift + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
    strip_high(a);
  }
  return a;
}

Dense gcd_primitive_prs(Dense a, Dense b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = pseudo_remainder(a, b);
    a = std::move(b);
    normalise_primitive(r);
    b = std::move(r);
  }
  normalise_primitive(a);
  return a;
}

mpz_class evaluate_at(const Dense& v, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    acc *= x;
    acc += v[i];
  }
  return acc;
}

mpz_class max_abs(const Dense& v) {
  mpz_class m = 0;
  for (const auto& c : v)
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

// Heuristic gcd (evaluate at a large integer, take the integer gcd and read
// the polynomial back off its balanced xi-adic digits).  Inputs are primitive
// and the answer is only accepted after it divides both.
std::optional<Dense> gcd_heuristic(const Dense& a, const Dense& b) {
  mpz_class xi = 2 * std::min(max_abs(a), max_abs(b)) + 29;
  const std::size_t deg = std::max(a.size(), b.size());
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 400000) break;
    mpz_class alpha = evaluate_at(a, xi);
    mpz_class beta = evaluate_at(b, xi);
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t());
    Dense g;
    mpz_class half = xi / 2;
    while (gamma != 0) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      g.push_back(r);
      gamma -= r;
      mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    }
    normalise_primitive(g);
    if (!g.empty() && poly_divide_exact(a, g) && poly_divide_exact(b, g)) return g;
    xi = (xi * 73794) / 27011;
  }
  return std::nullopt;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, mpz_class>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<mpz_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  strip_high(coeffs_);
  if (coeffs_.empty()) {
    low_ = 0;
    return;
  }
  std::size_t first = 0;
  while (coeffs_[first] == 0) ++first;
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

bool LaurentPoly::is_monomial() const {
  return coeffs_.size() == 1;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  if (exponent < low_ || exponent > high_degree() || is_zero()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpz_class>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -high_degree();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

mpz_class LaurentPoly::content() const { return content_of(coeffs_); }

mpz_class LaurentPoly::l1_norm() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += abs(c);
  return s;
}

mpz_class LaurentPoly::max_norm() const { return max_abs(coeffs_); }

LaurentPoly LaurentPoly::divided_by(const mpz_class& c) const {
  if (c == 0) throw DivisionByZero("integer division by zero");
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw NotDivisible("coefficient not divisible by " + c.get_str());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1));
  const std::size_t off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  p.add_product(a, b);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const int plo = a.low_ + b.low_;
  const int phi = a.high_degree() + b.high_degree();
  if (is_zero()) {
    low_ = plo;
    coeffs_.assign(static_cast<std::size_t>(phi - plo + 1), mpz_class(0));
  } else {
    const int lo = std::min(low_, plo);
    const int hi = std::max(high_degree(), phi);
    if (lo < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
      low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1));
  }
  const std::size_t off = static_cast<std::size_t>(plo - low_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(coeffs_[off + i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
    }
  }
  trim();
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  if (auto c = a.low_ <=> b.low_; c != 0) return c;
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string render(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  auto ts = p.terms();
  bool first = true;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << (latex ? "" : "*");
    os << 'A';
    if (e != 1) {
      if (latex)
        os << "^{" << e << '}';
      else
        os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace

std::string LaurentPoly::str() const { return render(*this, false); }
std::string LaurentPoly::latex() const { return render(*this, true); }

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(low_);
  for (const auto& c : coeffs_) {
    const std::size_t v = mpz_get_ui(c.get_mpz_t()) ^ (static_cast<std::size_t>(sgn(c) + 1) << 61);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Both are A^k times a polynomial with nonzero constant term, and A is a unit.
  auto q = poly_divide_exact(a.dense(), b.dense());
  if (!q) return std::nullopt;
  return LaurentPoly::from_dense(a.low_degree() - b.low_degree(), std::move(*q));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw NotDivisible("(" + a.str() + ") is not divisible by (" + b.str() + ")");
  return *q;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto normalised = [](const LaurentPoly& p) {
    Dense v = p.dense();
    const mpz_class c = content_of(v);
    normalise_primitive(v);
    LaurentPoly out = LaurentPoly::from_dense(0, std::move(v));
    out *= c;
    return out;
  };
  if (a.is_zero()) return normalised(b);
  if (b.is_zero()) return normalised(a);

  Dense pa = a.dense();
  Dense pb = b.dense();
  const mpz_class ca = content_of(pa);
  const mpz_class cb = content_of(pb);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  divide_all(pa, ca);
  divide_all(pb, cb);
  if (pa.size() == 1 || pb.size() == 1) return LaurentPoly(c);

  Dense g;
  if (pa == pb || (pa.size() == pb.size() && std::equal(pa.begin(), pa.end(), pb.begin(), [](const mpz_class& x, const mpz_class& y) { return x == -y; }))) {
    g = pa;
    normalise_primitive(g);
  } else if (auto h = gcd_heuristic(pa, pb)) {
    g = std::move(*h);
  } else {
    g = gcd_primitive_prs(pa, pb);
  }
  LaurentPoly out = LaurentPoly::from_dense(0, std::move(g));
  out *= c;
  return out;
}

}  // namespace skein
