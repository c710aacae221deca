#pragma once

#include <string>

#include "edo/rng.hpp"
#include "edo/segments.hpp"
#include "edo/tour.hpp"

namespace edo {

enum class MutationMode { Classic, BiasedAbsolute, BiasedNormalised };

// Operator choice at the run level: a single classic offspring, a single
// biased offspring, or the dual biased+classic pair per iteration.
enum class MutationOp { Classic, Biased, Dual };

std::string mutation_op_name(MutationOp op);
MutationOp parse_mutation_op(const std::string& s);

// Two cut positions drawn uniformly among valid non-adjacent pairs.
TwoOptMove classic_two_opt(const Tour& t, Rng& rng);

// One of the 2n directed segments of t, identified by window start and
// orientation.
struct SegmentChoice {
    int start = 0;
    bool reversed = false;
};

// Draws one of t's segments using the population frequencies: normalised
// mode samples proportionally to f(s), absolute mode uniformly among the
// maximally frequent segments of t.
SegmentChoice sample_biased_segment(const Tour& t, const SegmentTable& tab, MutationMode mode,
                                    Rng& rng);

// Biased 2-OPT: each cut edge comes from an independently sampled segment
// (uniform choice among the segment's k-1 edges). Invalid pairs are
// resampled a bounded number of times, then the draw falls back to the
// classic uniform move, so the operator always terminates.
TwoOptMove biased_two_opt(const Tour& t, const SegmentTable& tab, MutationMode mode, Rng& rng);

// Algorithm step 2: p' by biased 2-OPT (normalised when constrained,
// absolute when unconstrained), p'' by classic 2-OPT.
struct OffspringPair {
    TwoOptMove biased_move;
    TwoOptMove classic_move;
    Tour biased;
    Tour classic_;
};

OffspringPair dual_offspring(const Tour& t, const SegmentTable& tab, bool constrained,
                             const Instance& inst, Rng& rng);

}  // namespace edo
