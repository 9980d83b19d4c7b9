#pragma once

#include "skein/quantum.hpp"
#include "skein/tl_element.hpp"

namespace skein {

/// Element of the skein module of the annulus: a polynomial in the core
/// curve z with Q(A) coefficients.
using ClosedAnnElement = FormalPoly;

/// Plane closure: left point j joined to right point j by arcs that do not
/// interact; every loop counts d.
RationalFn close_disk(const TLElement& x);

/// Annular closure: the closing arcs run around the hole.  A loop that winds
/// once around the hole is z, a loop that does not is d.
ClosedAnnElement close_annulus(const TLElement& x);

}  // namespace skein
