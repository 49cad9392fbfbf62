#pragma once

// Corpus sweeps: classifier against the exhaustive oracle, and the
// cancellation grid. Each has a serial reference and an OpenMP version that
// must produce identical results.

#include <string>
#include <utility>
#include <vector>

#include "dsurf/cancellation.hpp"
#include "dsurf/isoclass.hpp"

namespace dsurf {

struct IsoSweepResult {
    std::size_t pairs = 0;
    std::size_t agreements = 0;
    std::size_t isomorphic = 0;
    /// Positive verdicts whose witness maps passed verification.
    std::size_t witnesses_verified = 0;
    /// "left vs right: ..." for each disagreement or failed witness, in pair order.
    std::vector<std::string> failures;

    bool operator==(const IsoSweepResult&) const = default;
};

/// All ordered pairs of the corpus.
IsoSweepResult iso_sweep_serial(const std::vector<RingSpec>& corpus);
IsoSweepResult iso_sweep_parallel(const std::vector<RingSpec>& corpus);

struct GridPoint {
    FieldSpec field;
    unsigned n1 = 0, n2 = 0;
};

struct GridOutcome {
    GridPoint point;
    Report report;
    /// Set when construction threw.
    std::string error;

    bool passed() const { return error.empty() && report.passed(); }
};

std::vector<GridPoint> cancellation_grid(const std::vector<FieldSpec>& fields,
                                         const std::vector<std::pair<unsigned, unsigned>>& pairs);
std::vector<GridOutcome> cancellation_sweep_serial(const std::vector<GridPoint>& grid);
std::vector<GridOutcome> cancellation_sweep_parallel(const std::vector<GridPoint>& grid);

}  // namespace dsurf
