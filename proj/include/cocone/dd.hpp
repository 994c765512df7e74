#ifndef COCONE_DD_HPP
#define COCONE_DD_HPP

#include <optional>
#include <vector>

#include "cocone/linalg.hpp"

namespace cocone {

// Result of a double-description run on {x : <row_i, x> >= 0}.
struct DDResult {
    // Extreme rays as primitive integer vectors, lexicographically sorted.
    // Empty when the cone is {0}.
    std::vector<IVec> rays;
};

// Extreme rays of the polyhedral cone {x in R^dim : <row, x> >= 0 for all
// rows}, by incremental double description. The cone must be pointed, which
// holds exactly when the rows span R^dim; otherwise NotPointed-style failure
// is signalled by returning the lineality direction instead.
struct DDOutcome {
    std::optional<IVec> lineality; // set when the cone contains this line
    DDResult result;               // valid when lineality is absent
};

DDOutcome extreme_rays(const std::vector<IVec>& rows, int dim);

} // namespace cocone

#endif
