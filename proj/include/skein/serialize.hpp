#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skein/laurent_poly.hpp"
#include "skein/matching.hpp"
#include "skein/mobius.hpp"
#include "skein/quantum.hpp"
#include "skein/rational_fn.hpp"
#include "skein/tl_element.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

// [[exponent, "coefficient"], ...] by increasing exponent
Json to_json(const LaurentPoly& p);
// {"num": ..., "den": ...}
Json to_json(const RationalFn& r);
// sorted [[a, b], ...] of boundary points
Json to_json(const Matching& m);
// [{"matching": ..., "coeff": ...}, ...] in basis order
Json to_json(const TLElement& x);
// [{"<key>": k, "coeff": "..."}, ...], highest degree first
Json to_json(const FormalPoly& p, const std::string& key);
// [{"z_deg", "x_deg", "coeff"}, ...], z then x degree descending
Json to_json(const ClosedMbElement& c);
Json to_json(const MbConnection& c);

/// Shortest product e_{i1} e_{i2} ... equal to m (no loops), found by
/// breadth-first search over TL_n diagrams.  Empty word for the identity;
/// nullopt when m is not square or n exceeds the search bound.
std::optional<std::vector<int>> e_word(const Matching& m);

std::string latex(const Matching& m);
std::string latex(const TLElement& x);

}  // namespace skein
