#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "edo/tour.hpp"

namespace edo {

// Directed sequence of k distinct node ids.
using Segment = std::vector<int>;

// Forward window of k nodes starting at cyclic position start.
Segment segment_window(const std::vector<int>& perm, int start, int k);

// All 2n directed segments of a tour: the n forward windows plus their
// reversals. Within one tour all 2n are distinct.
std::vector<Segment> extract_segments(const Tour& t, int k);

// Population-wide frequency table of directed k-segments. Counts for a
// segment and its reversal are always equal when the table is built from
// tours (both traversal directions are enumerated). Total is the number
// of occurrences, 2*n*mu for a population of mu tours.
class SegmentTable {
public:
    SegmentTable(int n, int k);

    static SegmentTable build(const std::vector<Tour>& population, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    long long total() const { return total_; }
    std::size_t distinct() const;  // stored keys with positive count

    int count(const Segment& s) const;
    // Adjusts one count; erases the key at zero, throws below zero.
    void add(const Segment& s, int delta);
    void add_tour(const Tour& t, int sign);  // sign +1 inserts, -1 removes

    void apply_delta(const std::vector<Segment>& removed, const std::vector<Segment>& added);

    // Visits (segment, count) for every stored key; order unspecified.
    void for_each(const std::function<void(const Segment&, int)>& fn) const;
    // Count-only visit, avoids decoding keys.
    template <typename F>
    void for_each_count(F fn) const {
        if (packed_) {
            for (const auto& [key, c] : packed_counts_) fn(c);
        } else {
            for (const auto& [key, c] : seq_counts_) fn(c);
        }
    }

    bool operator==(const SegmentTable& other) const;

private:
    struct SeqHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::uint64_t h = 1469598103934665603ULL;
            for (int x : v) {
                h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
                h *= 1099511628211ULL;
            }
            return static_cast<std::size_t>(h);
        }
    };

    std::uint64_t pack(const Segment& s) const;
    Segment unpack(std::uint64_t key) const;

    int n_;
    int k_;
    int bits_;      // bits per node id in a packed key
    bool packed_;   // k_ * bits_ <= 64: keys fit one machine word
    long long total_ = 0;
    std::unordered_map<std::uint64_t, int> packed_counts_;
    std::unordered_map<std::vector<int>, int, SeqHash> seq_counts_;
};

// Smallest/largest occurrence counts over all u = n!/(n-k)! possible
// segments (absent segments count as zero) and their gap C.
struct FrequencySummary {
    long long f_min = 0;
    long long f_max = 0;
    long long gap = 0;  // C = f_max - f_min
};

FrequencySummary summarise(const SegmentTable& tab, int n, int mu);

// Segments destroyed/created by a 2-OPT move, computed from the windows
// overlapping the two cut edges only. |removed| == |added|; applying the
// delta to build(t) yields build(apply_two_opt(t, m)).
struct MoveDelta {
    std::vector<Segment> removed;
    std::vector<Segment> added;
};

MoveDelta move_delta(const Tour& t, const TwoOptMove& m, int k, const Instance& inst);

// n!/(n-k)!, saturating at uint64 max; saturated is reported separately.
struct SegmentSpaceSize {
    std::uint64_t u = 0;
    bool saturated = false;
};
SegmentSpaceSize segment_space_size(int n, int k);

// CSV dump: one row per stored segment, nodes joined by '-', then count.
void write_segment_frequencies(const SegmentTable& tab, std::ostream& out);

}  // namespace edo
