#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "edo/baselines.hpp"
#include "edo/entropy.hpp"
#include "edo/instance.hpp"
#include "edo/mutation.hpp"
#include "edo/rng.hpp"
#include "edo/segments.hpp"

namespace edo {

enum class Selection { ParentPool, FullPopulation };

std::string selection_name(Selection s);
Selection parse_selection(const std::string& s);

enum class Termination { ReachedHmax, BudgetExhausted };

struct EaConfig {
    int mu = 12;
    int k = 2;
    // Relative cost threshold; infinity means unconstrained.
    double alpha = std::numeric_limits<double>::infinity();
    double opt_cost = 0.0;
    long long budget = 100000;  // cost evaluations (= generated offspring)
    Measure measure = Measure::Entropy;
    MutationOp mutation = MutationOp::Dual;
    Selection selection = Selection::ParentPool;
    std::uint64_t seed = 1;
    long long trace_every = 100;
    bool verify = false;  // rebuild-and-compare incremental state every 1000 steps

    bool constrained() const { return alpha != std::numeric_limits<double>::infinity(); }
    double cost_bound() const {
        return constrained() ? (1.0 + alpha) * opt_cost
                             : std::numeric_limits<double>::infinity();
    }
};

struct TraceRow {
    long long eval = 0;
    double H = 0.0;
    double H_norm = 0.0;
    long long f_min = 0;
    long long f_max = 0;
    long long gap = 0;
    long long feasible_offspring = 0;  // cumulative
};

struct RunRecord {
    long long evals_used = 0;
    std::vector<TraceRow> trace;
    Termination termination = Termination::BudgetExhausted;
    std::vector<Tour> final_population;
    double final_H = 0.0;
    double final_H_norm = 0.0;
    long long evals_to_hmax = -1;  // -1 when H_max was never reached
    long long feasible_offspring = 0;
    double wall_ms = 0.0;
};

// mu copies of the optimal tour (constrained) or of the identity
// permutation (unconstrained). Constrained mode requires opt->opt_tour.
std::vector<Tour> initialise(const Instance& inst, const OptimumInfo* opt, const EaConfig& cfg);

// One steady-state run of the diversity-maximising EA. step() performs a
// single iteration (parent choice, offspring, survivor selection) and
// returns the number of cost evaluations consumed.
class EaRun {
public:
    EaRun(const Instance& inst, const OptimumInfo* opt, const EaConfig& cfg);

    int step();

    const std::vector<Tour>& population() const { return tours_; }
    const SegmentTable& table() const { return table_; }
    double entropy_now() const { return H_; }
    double exact_entropy() const;  // recomputed from the table
    const EntropyBounds& bounds() const { return bounds_; }
    long long evals_used() const { return evals_; }
    long long feasible_offspring() const { return feasible_count_; }
    bool reached_hmax();  // confirms against an exact recompute
    long long steps_taken() const { return steps_; }

private:
    struct Candidate {
        bool is_offspring = false;
        int preference = 0;  // larger wins ties
        TwoOptMove move;
        Tour tour;
        double score = 0.0;  // entropy delta (parent pool) or measure value
    };

    int step_parent_pool();
    int step_full_population();
    void commit_replace(int idx, Tour tour, const MoveDelta& delta, double dH);
    void verify_state() const;
    std::vector<std::pair<TwoOptMove, bool>> generate_moves(const Tour& parent);

    const Instance& inst_;
    EaConfig cfg_;
    Rng rng_;
    std::vector<Tour> tours_;
    SegmentTable table_;
    EntropyBounds bounds_;
    double H_ = 0.0;
    long long evals_ = 0;
    long long steps_ = 0;
    long long feasible_count_ = 0;
    std::unique_ptr<PairwiseDiffMatrix> edges_;  // only for ED/PD fitness
};

// Full run loop: steps until H_max - 1e-9 is reached or the evaluation
// budget is exhausted, tracing every trace_every evaluations.
RunRecord run(const Instance& inst, const OptimumInfo* opt, const EaConfig& cfg);

}  // namespace edo
