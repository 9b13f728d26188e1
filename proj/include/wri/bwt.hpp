#pragma once

#include <cstdint>
#include <vector>

#include "wri/graph.hpp"

namespace wri {

struct Run {
    Label label;
    std::uint64_t length;

    bool operator==(const Run &) const = default;
};

/**
 * BWT of a Wheeler graph: one label per edge, grouped by source in rank order
 * and, within a source, ordered by destination rank (ties by input order).
 */
struct GraphBwt {
    std::vector<Label> labels;
    std::vector<Run> runs;
    // edge_at[p] = (src, dst) of the edge whose label sits at position p
    std::vector<std::pair<Rank, Rank>> edge_at;
    // edge_index[p] = index into WheelerGraph::edges
    std::vector<std::uint64_t> edge_index;

    std::uint64_t size() const { return labels.size(); }
    std::uint64_t num_runs() const { return runs.size(); }
};

// Throws NotWheelerError unless validate_wheeler(g) accepts.
GraphBwt build_bwt(const WheelerGraph &g);

// Same, without re-validating. For callers that have already validated g.
GraphBwt build_bwt_unchecked(const WheelerGraph &g);

/**
 * Run-length encoded label sequence with rank and select. Storage is one
 * entry per run plus a per-label directory.
 */
class RLSequence {
  public:
    RLSequence() = default;
    explicit RLSequence(const GraphBwt &bwt);

    std::uint64_t size() const { return size_; }
    std::uint64_t num_runs() const { return run_starts_.size(); }
    Label sigma() const { return static_cast<Label>(label_totals_.size()); }

    Label operator[](std::uint64_t pos) const;

    // occurrences of c in [0, pos); pos <= size()
    std::uint64_t rank(Label c, std::uint64_t pos) const;
    // position of the (k+1)-th occurrence of c; throws std::out_of_range if
    // c has at most k occurrences
    std::uint64_t select(Label c, std::uint64_t k) const;
    std::uint64_t count(Label c) const { return c < sigma() ? label_totals_[c] : 0; }
    // true iff pos is the last position of its run
    bool is_run_end(std::uint64_t pos) const;

    std::uint64_t words() const;

    bool operator==(const RLSequence &) const = default;

  private:
    friend struct Serializer;

    std::uint64_t run_of(std::uint64_t pos) const;

    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> run_starts_;
    std::vector<Label> run_labels_;
    // per label: indices of its runs and occurrences of it before each such run
    std::vector<std::vector<std::uint64_t>> label_runs_;
    std::vector<std::vector<std::uint64_t>> label_before_;
    std::vector<std::uint64_t> label_totals_;
};

RLSequence build_rank_select(const GraphBwt &bwt);

struct DegreeSums {
    // out_prefix[v] = number of edges leaving ranks < v; length n + 1
    std::vector<std::uint64_t> out_prefix;
    // in_prefix[v] = number of edges entering ranks < v; length n + 1
    std::vector<std::uint64_t> in_prefix;
    // f_label[c] = number of edges labelled < c; length sigma + 1
    std::vector<std::uint64_t> f_label;

    std::uint64_t words() const { return out_prefix.size() + in_prefix.size() + f_label.size(); }

    // rank whose incoming-edge slots contain slot
    Rank vertex_of_in_slot(std::uint64_t slot) const;

    bool operator==(const DegreeSums &) const = default;
};

DegreeSums build_partial_sums(const WheelerGraph &g);

} // namespace wri
