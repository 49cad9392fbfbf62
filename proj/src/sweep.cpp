#include "dsurf/sweep.hpp"

#include <optional>

namespace dsurf {

namespace {

struct PairOutcome {
    bool agree = false;
    bool isomorphic = false;
    bool witness_ok = false;
    std::string failure;
};

PairOutcome check_pair(const RingSpec& l, const RingSpec& r) {
    PairOutcome out;
    const std::string tag = l.to_string() + " vs " + r.to_string() + ": ";
    try {
        const IsoVerdict a = classify(l, r);
        const IsoVerdict b = iso_oracle_enumerate(l, r);
        out.agree = a.isomorphic == b.isomorphic && a.eta == b.eta && a.mu == b.mu;
        out.isomorphic = a.isomorphic;
        if (!out.agree) {
            out.failure = tag + "classifier says " + (a.isomorphic ? "isomorphic" : to_string(a.reason)) +
                          ", oracle says " + (b.isomorphic ? "isomorphic" : to_string(b.reason));
            if (a.mu && b.mu) out.failure += " (mu " + a.mu->to_string() + " vs " + b.mu->to_string() + ")";
        }
        if (a.isomorphic) {
            witness(l, r, a);
            out.witness_ok = true;
        }
    } catch (const Error& e) {
        out.failure = tag + e.what();
    }
    return out;
}

IsoSweepResult collect(const std::vector<PairOutcome>& outcomes) {
    IsoSweepResult res;
    res.pairs = outcomes.size();
    for (const auto& o : outcomes) {
        res.agreements += o.agree;
        res.isomorphic += o.isomorphic;
        res.witnesses_verified += o.witness_ok;
        if (!o.failure.empty()) res.failures.push_back(o.failure);
    }
    return res;
}

GridOutcome run_point(const GridPoint& p) {
    GridOutcome out{p, {}, {}};
    try {
        out.report = verify_cancellation(build_cancellation(p.field, p.n1, p.n2));
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

IsoSweepResult iso_sweep_serial(const std::vector<RingSpec>& corpus) {
    std::vector<PairOutcome> outcomes;
    for (const auto& l : corpus)
        for (const auto& r : corpus) outcomes.push_back(check_pair(l, r));
    return collect(outcomes);
}

IsoSweepResult iso_sweep_parallel(const std::vector<RingSpec>& corpus) {
    const long n = static_cast<long>(corpus.size());
    std::vector<PairOutcome> outcomes(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n * n; ++k) outcomes[k] = check_pair(corpus[k / n], corpus[k % n]);
    return collect(outcomes);
}

std::vector<GridPoint> cancellation_grid(const std::vector<FieldSpec>& fields,
                                         const std::vector<std::pair<unsigned, unsigned>>& pairs) {
    std::vector<GridPoint> grid;
    for (const auto& f : fields)
        for (const auto& [n1, n2] : pairs) grid.push_back({f, n1, n2});
    return grid;
}

std::vector<GridOutcome> cancellation_sweep_serial(const std::vector<GridPoint>& grid) {
    std::vector<GridOutcome> out;
    for (const auto& p : grid) out.push_back(run_point(p));
    return out;
}

std::vector<GridOutcome> cancellation_sweep_parallel(const std::vector<GridPoint>& grid) {
    std::vector<std::optional<GridOutcome>> slots(grid.size());
    const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) slots[k] = run_point(grid[k]);
    std::vector<GridOutcome> out;
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace dsurf
