#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edo/tour.hpp"

namespace edo {

enum class Measure { Entropy, EdgeDiversity, PairwiseDistance };

std::string measure_name(Measure m);
Measure parse_measure(const std::string& s);

// |E(p) \ E(q)| over directed edges (both orientations); always even,
// at most 2n.
int edge_difference(const Tour& p, const Tour& q);

// ED(P) = sum over ordered pairs of |E(p) \ E(q)|. Requires mu >= 2.
double edge_diversity(const std::vector<Tour>& population);

// PD(P) = (1 / (n mu)) * sum_p min_{q != p} |E(p) \ E(q)|. Requires mu >= 2.
double pairwise_distance(const std::vector<Tour>& population);

// Incrementally maintained mu x mu matrix of |E(p) \ E(q)| backing the
// edge-based fitness functions inside the EA. Candidate evaluations never
// mutate the committed state.
class PairwiseDiffMatrix {
public:
    explicit PairwiseDiffMatrix(const std::vector<Tour>& population);

    int size() const { return mu_; }
    int at(int p, int q) const { return diff_[static_cast<std::size_t>(p) * mu_ + q]; }

    double ed() const;
    double pd(int n) const;

    // Measure value if member idx were replaced by cand.
    double ed_if_replaced(int idx, const Tour& cand) const;
    double pd_if_replaced(int idx, const Tour& cand, int n) const;

    void replace(int idx, const Tour& cand);

    // Full-population survivor scan: scores[q] is the measure of
    // P + {cand} - {q} for q in 0..mu-1; keep_score is the measure of P.
    struct DiscardScan {
        std::vector<double> scores;
        double keep_score = 0.0;
    };
    DiscardScan scan_discards_ed(const Tour& cand) const;
    DiscardScan scan_discards_pd(const Tour& cand, int n) const;

private:
    std::vector<int> row_against(const Tour& cand) const;

    int mu_;
    int n_;
    std::vector<std::vector<std::uint64_t>> edge_keys_;  // sorted undirected keys per tour
    std::vector<int> diff_;
};

}  // namespace edo
