#include "wri/bwt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wri/error.hpp"

namespace wri {

GraphBwt build_bwt(const WheelerGraph &g) {
    auto report = validate_wheeler(g);
    if (!report.is_wheeler)
        throw NotWheelerError("graph violates the Wheeler axioms: "
                              + describe(g, report.violations.front()));
    return build_bwt_unchecked(g);
}

GraphBwt build_bwt_unchecked(const WheelerGraph &g) {
    GraphBwt bwt;
    bwt.edge_index = bwt_edge_order(g);
    bwt.labels.reserve(g.m());
    bwt.edge_at.reserve(g.m());
    for (std::uint64_t idx : bwt.edge_index) {
        const Edge &e = g.edges[idx];
        bwt.labels.push_back(e.label);
        bwt.edge_at.emplace_back(e.src, e.dst);
        if (bwt.runs.empty() || bwt.runs.back().label != e.label) {
            bwt.runs.push_back({ e.label, 1 });
        } else {
            ++bwt.runs.back().length;
        }
    }
    return bwt;
}

RLSequence::RLSequence(const GraphBwt &bwt) : size_(bwt.size()) {
    Label sigma = 0;
    for (const Run &run : bwt.runs) {
        sigma = std::max<Label>(sigma, run.label + 1);
    }
    label_runs_.resize(sigma);
    label_before_.resize(sigma);
    label_totals_.assign(sigma, 0);
    run_starts_.reserve(bwt.num_runs());
    run_labels_.reserve(bwt.num_runs());

    std::uint64_t start = 0;
    for (const Run &run : bwt.runs) {
        label_runs_[run.label].push_back(run_starts_.size());
        label_before_[run.label].push_back(label_totals_[run.label]);
        label_totals_[run.label] += run.length;
        run_starts_.push_back(start);
        run_labels_.push_back(run.label);
        start += run.length;
    }
}

RLSequence build_rank_select(const GraphBwt &bwt) {
    return RLSequence(bwt);
}

std::uint64_t RLSequence::run_of(std::uint64_t pos) const {
    auto it = std::upper_bound(run_starts_.begin(), run_starts_.end(), pos);
    return static_cast<std::uint64_t>(it - run_starts_.begin()) - 1;
}

Label RLSequence::operator[](std::uint64_t pos) const {
    if (pos >= size_)
        throw std::out_of_range("position " + std::to_string(pos) + " out of range");
    return run_labels_[run_of(pos)];
}

std::uint64_t RLSequence::rank(Label c, std::uint64_t pos) const {
    if (c >= sigma() || pos == 0)
        return 0;
    if (pos >= size_)
        return label_totals_[c];

    const std::uint64_t run = run_of(pos);
    const auto &runs = label_runs_[c];
    // first run of c at or after the run containing pos
    auto it = std::lower_bound(runs.begin(), runs.end(), run);
    const std::size_t t = it - runs.begin();
    if (it != runs.end() && *it == run)
        return label_before_[c][t] + (pos - run_starts_[run]);
    return t < runs.size() ? label_before_[c][t] : label_totals_[c];
}

std::uint64_t RLSequence::select(Label c, std::uint64_t k) const {
    if (c >= sigma() || k >= label_totals_[c])
        throw std::out_of_range("select: label " + std::to_string(c) + " has fewer than "
                                + std::to_string(k + 1) + " occurrences");
    const auto &before = label_before_[c];
    // last run of c with fewer than k+1 occurrences before it
    auto it = std::upper_bound(before.begin(), before.end(), k);
    const std::size_t t = (it - before.begin()) - 1;
    return run_starts_[label_runs_[c][t]] + (k - before[t]);
}

bool RLSequence::is_run_end(std::uint64_t pos) const {
    if (pos >= size_)
        throw std::out_of_range("position " + std::to_string(pos) + " out of range");
    if (pos + 1 == size_)
        return true;
    return std::binary_search(run_starts_.begin(), run_starts_.end(), pos + 1);
}

std::uint64_t RLSequence::words() const {
    std::uint64_t words = 1 + run_starts_.size() + run_labels_.size() + label_totals_.size();
    for (Label c = 0; c < sigma(); ++c) {
        words += label_runs_[c].size() + label_before_[c].size();
    }
    return words;
}

Rank DegreeSums::vertex_of_in_slot(std::uint64_t slot) const {
    auto it = std::upper_bound(in_prefix.begin(), in_prefix.end(), slot);
    return static_cast<Rank>(it - in_prefix.begin()) - 1;
}

DegreeSums build_partial_sums(const WheelerGraph &g) {
    DegreeSums sums;
    sums.out_prefix.assign(g.n + 1, 0);
    sums.in_prefix.assign(g.n + 1, 0);
    sums.f_label.assign(static_cast<std::size_t>(g.sigma) + 1, 0);
    for (const Edge &e : g.edges) {
        ++sums.out_prefix[e.src + 1];
        ++sums.in_prefix[e.dst + 1];
        ++sums.f_label[e.label + 1];
    }
    for (std::uint64_t v = 0; v < g.n; ++v) {
        sums.out_prefix[v + 1] += sums.out_prefix[v];
        sums.in_prefix[v + 1] += sums.in_prefix[v];
    }
    for (Label c = 0; c < g.sigma; ++c) {
        sums.f_label[c + 1] += sums.f_label[c];
    }
    return sums;
}

} // namespace wri
