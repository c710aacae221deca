#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edo {

enum class InstanceKind { Euclidean2d, Explicit, Unit };

// Symmetric TSP instance with a dense distance matrix. Node ids are
// normalised to 0..n-1; TSPLIB's 1-based ids are converted at the parse
// boundary. Immutable after construction, safe to share across runs.
class Instance {
public:
    Instance(std::string name, int n, std::vector<double> dist, InstanceKind kind,
             std::vector<std::pair<double, double>> coords = {});

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    InstanceKind kind() const { return kind_; }
    double dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    bool has_coords() const { return !coords_.empty(); }
    std::pair<double, double> coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }

private:
    std::string name_;
    int n_;
    std::vector<double> dist_;
    InstanceKind kind_;
    std::vector<std::pair<double, double>> coords_;
};

// Known optimum for an instance. opt_tour, when present, is a 0-based
// permutation whose cycle cost equals opt_cost (1e-6 relative tolerance).
struct OptimumInfo {
    double opt_cost = 0.0;
    std::optional<std::vector<int>> opt_tour;
};

// TSPLIB .tsp parser. Supports EUC_2D (nearest-integer rounding) and
// EXPLICIT with FULL_MATRIX / UPPER_ROW / LOWER_DIAG_ROW weight formats.
Instance parse_tsplib(std::istream& in);
Instance parse_tsplib_file(const std::string& path);

// Serialises as EXPLICIT FULL_MATRIX; parse(write(inst)) preserves the matrix.
void write_tsplib_explicit(const Instance& inst, std::ostream& out);

// TSPLIB .tour file (TOUR_SECTION, -1 terminator) or a plain cost value.
OptimumInfo parse_opt_tour(std::istream& in, const Instance& inst);
OptimumInfo parse_opt_tour_file(const std::string& path, const Instance& inst);

// Complete graph with unit edge weights; every tour costs n.
Instance unit_graph(int n);

}  // namespace edo
