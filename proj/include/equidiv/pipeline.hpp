#pragma once

#include "equidiv/division.hpp"
#include "equidiv/lattice_search.hpp"

#include <optional>

namespace equidiv {

struct DivideRun {
    DivisionOutcome outcome;
    /// Search report of the labeled-simplex pipeline (prime k only).
    std::optional<DivisionReport> report;
};

/// Prime k goes through epsilon_divide, composite k through
/// compose_division. The returned scheme has been re-integrated against eps.
DivideRun divide(const std::vector<Measure>& measures, int k, const Rational& epsilon,
                 const DivideOptions& options = {});

}  // namespace equidiv
