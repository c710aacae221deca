#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "edo/instance.hpp"
#include "edo/segments.hpp"
#include "edo/tour.hpp"

namespace edo {

// Linearised model: minimise C = f_max - f_min subject to degree, MTZ
// subtour, segment-indicator linking and quality constraints. Variables:
// x[p][i][j] (binary, edge (i,j) in tour p), w[p][i] (integer position,
// node 0 is the depot with w fixed to 0), y[p][s] (binary, tour p
// contains directed segment s in either orientation), f_min, f_max.
struct MipModel {
    int n = 0;
    int mu = 0;
    int k = 0;
    bool constrained = false;
    double alpha = 0.0;
    double opt_cost = 0.0;
    Instance inst;
    std::vector<Segment> segments;  // all u directed segments, lexicographic

    long long u() const { return static_cast<long long>(segments.size()); }
    long long num_x() const { return static_cast<long long>(mu) * n * (n - 1); }
    long long num_y() const { return static_cast<long long>(mu) * u(); }
    long long num_w() const { return static_cast<long long>(mu) * n; }

    long long quality_constraints() const { return constrained ? mu : 0; }
    long long degree_constraints() const { return 2LL * n * mu; }
    // Standard MTZ over i,j in {1..n-1}: the depot row/column is omitted,
    // otherwise returning to the depot would be infeasible.
    long long mtz_constraints() const { return static_cast<long long>(mu) * (n - 1) * (n - 2); }
    long long position_bound_constraints() const { return static_cast<long long>(mu) * (n - 1); }
    long long linking_constraints() const { return 2LL * mu * u(); }
    long long occurrence_cap_constraints() const { return 1; }
    long long minmax_constraints() const { return 2LL * u(); }
    long long total_constraints() const {
        return quality_constraints() + degree_constraints() + mtz_constraints() +
               position_bound_constraints() + linking_constraints() +
               occurrence_cap_constraints() + minmax_constraints();
    }
};

// Guardrails: n <= 20, k in {2,3}, mu <= 24 (variable explosion beyond).
MipModel build_mip(const Instance& inst, int mu, int k, std::optional<double> alpha,
                   double opt_cost);

// Deterministic CPLEX LP-format text; two emissions are byte-identical.
void write_lp(const MipModel& model, std::ostream& out);

// Decoded solver solution: tours recovered from x, validated against the
// y indicators, scored by gap C (over all u segments) and entropy H.
struct IngestResult {
    std::vector<Tour> tours;
    long long C = 0;
    double H = 0.0;
};

// Reads a `name value` per-line assignment file (unlisted variables are
// treated as zero; values are rounded to the nearest integer).
IngestResult ingest_solution(const MipModel& model, std::istream& sol);

// Exhaustive enumeration of all multisets of mu feasible tours (tours
// canonicalised up to rotation: position 0 is node 0; both directions
// enumerated). Exact maximum entropy with the gap values of the optima.
struct OracleResult {
    double best_H = 0.0;
    long long best_C = 0;  // smallest gap among optimal populations
    std::vector<std::vector<std::vector<int>>> best_populations;  // capped exemplars
    long long optima_count = 0;
    long long enumerated_count = 0;
    bool matches_hmax = false;  // best_H within 1e-9 of the closed-form bound
};

OracleResult brute_force_oracle(const Instance& inst, int mu, int k, std::optional<double> alpha,
                                double opt_cost, long long enumeration_cap = 10000000,
                                std::size_t exemplar_cap = 64);

}  // namespace edo
