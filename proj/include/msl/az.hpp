#pragma once

#include "msl/multisegment.hpp"

namespace msl {

/// The multisegment involution computed by chain extraction:
/// repeatedly peel a maximal chain from the top right endpoint e,
/// extending by "right endpoint drops by exactly one, left endpoint
/// strictly smaller" and breaking ties toward the largest left
/// endpoint; each peeled chain of length r contributes [e-r+1, e]
/// and every chain member loses its last coordinate.
Multisegment az_involution(const Multisegment& m);

/// True iff double application returns the input.
bool az_is_involution_check(const Multisegment& m);

}  // namespace msl
