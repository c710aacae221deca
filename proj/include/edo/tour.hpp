#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "edo/instance.hpp"

namespace edo {

// Closed tour: a permutation of 0..n-1 with its cycle cost cached.
struct Tour {
    std::vector<int> perm;
    double cost = 0.0;

    int n() const { return static_cast<int>(perm.size()); }
    int at(int pos) const { return perm[static_cast<std::size_t>(pos)]; }
    // Node at cyclic position (handles pos in [-n, 2n)).
    int at_wrapped(int pos) const {
        const int n_ = n();
        return perm[static_cast<std::size_t>((pos % n_ + n_) % n_)];
    }
};

double tour_cost(const std::vector<int>& perm, const Instance& inst);
Tour make_tour(std::vector<int> perm, const Instance& inst);
Tour identity_tour(const Instance& inst);

// A 2-OPT move identified by the positions of the two removed edges
// (perm[i], perm[i+1]) and (perm[j], perm[j+1]), indices cyclic, i < j.
// The removed edges must be distinct and non-adjacent.
struct TwoOptMove {
    int i = 0;
    int j = 0;
};

bool two_opt_valid(int i, int j, int n);
// Canonicalises (sorts) the cut positions; throws on an invalid move.
TwoOptMove make_two_opt(int a, int b, int n);

// Cost change of applying m, from the four touched edges only.
double two_opt_cost_delta(const Tour& t, const TwoOptMove& m, const Instance& inst);
// Reverses the span between the cuts; cost updated via the delta formula.
Tour apply_two_opt(const Tour& t, const TwoOptMove& m, const Instance& inst);

// E(p): both orientations of each of the n cycle edges, |result| = 2n.
std::vector<std::pair<int, int>> edge_set(const Tour& t);

// One-line CSV: comma-separated node ids.
std::string tour_csv_line(const Tour& t);
// TSPLIB .tour format (1-based ids, -1 terminator).
void write_tour_tsplib(const Tour& t, const std::string& name, std::ostream& out);

}  // namespace edo
