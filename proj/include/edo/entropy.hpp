#pragma once

#include <cstdint>
#include <vector>

#include "edo/segments.hpp"

namespace edo {

// Population entropy H(P) = sum over segments of -(f/2nmu) ln(f/2nmu),
// in nats, with the convention 0 ln 0 = 0.
double entropy(const SegmentTable& tab, int n, int mu);

struct EntropyValue {
    double H = 0.0;
    double normalised = 0.0;  // (H - H_min) / (H_max - H_min)
};

// Closed-form extremes of H for given (n, mu, k) together with the
// optimal frequency profile: f*_min = floor(2nmu/u), C* = 0 iff u divides
// 2nmu else 1, and H_min = ln(2n) attained by mu copies of one tour.
struct EntropyBounds {
    double H_max = 0.0;
    double H_min = 0.0;
    long long f_min_star = 0;
    long long f_max_star = 0;
    int C_star = 0;
    std::uint64_t u = 0;
    bool u_saturated = false;

    double normalise(double H) const {
        return H_max > H_min ? (H - H_min) / (H_max - H_min) : 1.0;
    }
};

EntropyBounds entropy_bounds(int n, int mu, int k);

EntropyValue entropy_value(double H, const EntropyBounds& bounds);

// H(after) - H(before) for a table delta, evaluated from the touched
// counts only. Every removed segment must have a positive count.
double entropy_delta(const SegmentTable& tab, const std::vector<Segment>& removed,
                     const std::vector<Segment>& added, int n, int mu);

// Entropy gain of moving one occurrence from a maximal to a minimal
// segment (the four-term expression behind the C >= 2 improvement step).
// Strictly positive when gap >= 2, monotonically decreasing in f_max,
// vanishing as f_max grows with the population.
double transfer_gain(long long f_max, long long f_min, long long total);

// Same gain computed from a raw frequency vector; requires C >= 2.
double lemma1_transfer_gain(const std::vector<long long>& freqs, long long total);

}  // namespace edo
