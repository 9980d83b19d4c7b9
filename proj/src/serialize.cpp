#include "skein/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <tuple>
#include <map>
#include <mutex>
#include <sstream>

namespace skein {

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

Json to_json(const RationalFn& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

Json to_json(const Matching& m) {
  Json out = Json::array();
  for (auto [a, b] : m.boundary_pairs()) out.push_back(Json::array({a, b}));
  return out;
}

Json to_json(const TLElement& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) out.push_back(Json{{"matching", to_json(m)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const FormalPoly& p, const std::string& key) {
  Json out = Json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    out.push_back(Json{{key, it->first}, {"coeff", it->second.str()}});
  return out;
}

Json to_json(const ClosedMbElement& c) {
  Json out = Json::array();
  for (const auto& [k, v] : c.ordered_terms()) out.push_back(Json{{"z_deg", k.first}, {"x_deg", k.second}, {"coeff", v.str()}});
  return out;
}

Json to_json(const MbConnection& c) {
  Json planar = Json::array();
  for (auto [a, b] : c.planar) planar.push_back(Json::array({a, b}));
  Json out{{"n", c.n}, {"planar", planar}, {"crosscap", c.crosscap}};
  if (c.crosscap.empty()) out["hole_gap"] = c.hole_gap;
  out["z_exp"] = c.z_exp;
  out["x_flag"] = c.x_flag;
  return out;
}

namespace {

constexpr int kWordSearchBound = 8;

// Shortest loop-free words for every diagram of TL_n.
const std::map<Matching, std::vector<int>>& word_table(int n) {
  static std::mutex mu;
  static std::map<int, std::map<Matching, std::vector<int>>> tables;
  std::lock_guard lock(mu);
  auto [it, inserted] = tables.try_emplace(n);
  if (!inserted) return it->second;
  auto& table = it->second;
  std::deque<Matching> queue{Matching::identity(n)};
  table.emplace(queue.front(), std::vector<int>{});
  while (!queue.empty()) {
    const Matching m = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      const Composition c = compose(m, Matching::generator(n, i));
      if (c.loops != 0 || table.count(c.result)) continue;
      std::vector<int> w = table.at(m);
      w.push_back(i);
      table.emplace(c.result, std::move(w));
      queue.push_back(c.result);
    }
  }
  return table;
}

}  // namespace

std::optional<std::vector<int>> e_word(const Matching& m) {
  if (!m.is_square() || m.strands() > kWordSearchBound) return std::nullopt;
  const auto& table = word_table(m.strands());
  auto it = table.find(m);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string latex(const Matching& m) {
  if (auto w = e_word(m)) {
    if (w->empty()) return "1";
    std::string s;
    for (int i : *w) s += "e_{" + std::to_string(i) + "}";
    return s;
  }
  std::ostringstream os;
  os << "\\langle ";
  bool first = true;
  for (auto [a, b] : m.boundary_pairs()) {
    os << (first ? "" : ", ") << a << "\\text{-}" << b;
    first = false;
  }
  os << " \\rangle";
  return os.str();
}

std::string latex(const TLElement& x) {
  if (x.terms().empty()) return "0";
  // Shorter words first, so f_n reads 1 + ... like it is usually written.
  std::vector<std::tuple<std::size_t, std::string, const RationalFn*>> order;
  for (const auto& [m, c] : x.terms()) {
    auto w = e_word(m);
    order.emplace_back(w ? w->size() : SIZE_MAX, latex(m), &c);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [len, diagram, cp] : order) {
    const RationalFn& c = *cp;
    const bool integer = c.is_polynomial() && c.num().is_constant();
    const bool negative = integer && c.num().leading_coeff() < 0;
    const RationalFn shown = negative ? -c : c;
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << '-';
    first = false;
    if (integer && shown.num().leading_coeff() == 1)
      os << diagram;
    else if (integer)
      os << shown.latex() << (diagram == "1" ? "" : " " + diagram);
    else
      os << "\\left(" << shown.latex() << "\\right)" << (diagram == "1" ? "" : " " + diagram);
  }
  return os.str();
}

}  // namespace skein
