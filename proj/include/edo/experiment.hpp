#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "edo/ea.hpp"
#include "edo/instance.hpp"

namespace edo {

// Grid of runs: cross-product of mu, k, alpha, measure, mutation and
// selection choices, times the seed list.
struct ExperimentSpec {
    std::string instance_path;  // exclusive with unit_n
    int unit_n = 0;
    std::string opt_tour_path;
    double opt_cost = 0.0;
    bool has_opt_cost = false;

    std::vector<int> mu_grid{12};
    std::vector<int> k_grid{2};
    std::vector<double> alpha_grid;  // empty: unconstrained
    std::vector<Measure> measures{Measure::Entropy};
    std::vector<MutationOp> mutations{MutationOp::Dual};
    std::vector<Selection> selections;  // empty: per-measure default
    std::vector<std::uint64_t> seeds{1};

    long long budget = 100000;
    long long trace_every = 100;
    int jobs = 1;
    long long job_cap = 10000;
    std::string out_dir;
};

// Key-value sweep file: one `key = value` per line, '#' comments,
// comma-separated lists, `lo..hi` ranges for seeds.
ExperimentSpec parse_spec_file(std::istream& in);
ExperimentSpec parse_spec_file(const std::string& path);

struct RunResult {
    std::string config_id;
    std::uint64_t seed = 0;
    RunRecord record;
};

struct SummaryRow {
    std::string config_id;
    int runs = 0;
    double mean_H = 0.0;
    double min_H = 0.0;
    double max_H = 0.0;
    double mean_evals_to_hmax = -1.0;  // over runs that reached it; -1 if none
    int reached_hmax = 0;
    double H_min = 0.0;
    double H_max = 0.0;
    double wall_ms = 0.0;  // written to timings.csv, not summary.csv
};

struct ExperimentResult {
    std::vector<RunResult> runs;        // ordered by config then seed
    std::vector<SummaryRow> summaries;  // one per config
    std::vector<std::string> trace_files;
};

// Executes the grid (up to `jobs` runs concurrently), writes summary.csv,
// runs.csv, timings.csv and per-run trace CSVs under out_dir (when set).
// Output is deterministic given the seeds; timings.csv is the only
// non-reproducible file.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// Fig.5-style data: one row per undirected edge present in the population
// with its frequency and, for euclidean instances, the endpoint
// coordinates. Frequencies sum to n*mu.
void emit_edge_frequencies(const std::vector<Tour>& population, const Instance& inst,
                           std::ostream& out);

// One CSV line of node ids per tour.
void write_population(const std::vector<Tour>& population, std::ostream& out);

std::string format_double(double v);  // fixed 6 decimals, matches CSV output

}  // namespace edo
