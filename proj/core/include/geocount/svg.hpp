#pragma once

#include <string>
#include <vector>

#include "geocount/linalg.hpp"
#include "geocount/root_datum.hpp"

namespace geocount {

// Deterministic SVG picture of the scaled diagram of a rank 2 space over
// the window [-window, window]^2: every integer level line |k| <= window
// of every positive root clipped to the window (root hyperplanes at
// stroke-width 2, their translates at 1), unit lattice points as radius 2
// circles, coroot lattice points as radius 4 circles on top, and the given
// mark points as crosses.  All coordinates are computed in exact
// arithmetic and printed with three fixed decimals, so equal inputs
// produce identical bytes.
//
// Throws NotSupported when the datum rank is not 2, InvalidInput when the
// window is not positive or a mark has the wrong dimension.
std::string diagram_svg(const RootDatum& datum, const RationalMatrix& gamma,
                        const RationalMatrix& gamma0, const Rational& window,
                        const std::vector<RationalVector>& marks);

}  // namespace geocount
