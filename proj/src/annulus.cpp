#include "skein/annulus.hpp"

#include <cstdlib>
#include <map>

#include "skein/errors.hpp"

namespace skein {

namespace {

struct LoopCount {
  int trivial = 0;
  int essential = 0;
};

// Trace the closed components of a square diagram plus its closing arcs.
// Left position j closes onto right position j (index n + j).  A radial cut
// meets every closing arc once; crossing it right-to-left counts +1.
LoopCount trace_closure(const Matching& m) {
  const int n = m.strands();
  std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
  auto closing_partner = [n](int pos) { return pos < n ? pos + n : pos - n; };
  LoopCount out;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int winding = 0;
    int p = start;
    do {
      const int q = m.partner(p);
      seen[static_cast<std::size_t>(p)] = seen[static_cast<std::size_t>(q)] = 1;
      winding += q >= n ? 1 : -1;
      p = closing_partner(q);
    } while (p != start);
    if (winding == 0)
      ++out.trivial;
    else if (std::abs(winding) == 1)
      ++out.essential;
    else
      throw InternalError("annular closure produced a loop winding more than once");
  }
  return out;
}

}  // namespace

RationalFn close_disk(const TLElement& x) {
  const int n = x.strands();
  const LaurentPoly d = loop_value();
  std::map<int, RationalFn> by_loops;
  for (const auto& [m, c] : x.terms()) {
    // Components of the pairing union the closing pairs; each one is a loop.
    std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
    int loops = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      ++loops;
      int p = start;
      do {
        seen[static_cast<std::size_t>(p)] = 1;
        const int q = m.partner(p);
        seen[static_cast<std::size_t>(q)] = 1;
        p = q < n ? q + n : q - n;
      } while (p != start);
    }
    by_loops[loops] += c;
  }
  RationalFn total;
  for (const auto& [k, c] : by_loops) total += c * RationalFn(d.pow(static_cast<unsigned>(k)));
  return total;
}

ClosedAnnElement close_annulus(const TLElement& x) {
  const RationalFn d = loop_value();
  ClosedAnnElement total;
  for (const auto& [m, c] : x.terms()) {
    const LoopCount lc = trace_closure(m);
    total += FormalPoly::variable(lc.essential) * (c * d.pow(lc.trivial));
  }
  return total;
}

}  // namespace skein
