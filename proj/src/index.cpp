#include "wri/index.hpp"

#include <stdexcept>

#include "wri/error.hpp"

namespace wri {

WheelerRIndex build_index(const WheelerGraph &g) {
    if (g.n == 0)
        throw std::invalid_argument("cannot index a graph without vertices");
    auto report = validate_wheeler(g);
    if (!report.is_wheeler)
        throw NotWheelerError("graph violates the Wheeler axioms: "
                              + describe(g, report.violations.front()));

    const auto decomposition = decompose_paths(g);
    const auto ids = assign_identifiers(g, decomposition);
    const auto bwt = build_bwt_unchecked(g);

    WheelerRIndex ix;
    ix.n = g.n;
    ix.m = g.m();
    ix.sigma = g.sigma;
    ix.r = bwt.num_runs();
    ix.upsilon = decomposition.upsilon();
    ix.last_id = ids.id_of_rank[g.n - 1];
    ix.bwt = build_rank_select(bwt);
    ix.sums = build_partial_sums(g);
    ix.toehold = build_toehold(g, decomposition, ids, bwt);
    ix.phi = build_phi(g, decomposition, ids, bwt);
    return ix;
}

SpaceReport space_report(const WheelerRIndex &ix) {
    SpaceReport report;
    report.n = ix.n;
    report.m = ix.m;
    report.r = ix.r;
    report.upsilon = ix.upsilon;
    report.marked = ix.toehold.num_marked();
    report.phi_samples = ix.phi.size();
    report.rank_select_words = ix.bwt.words();
    report.partial_sum_words = ix.sums.words();
    report.toehold_words = ix.toehold.words();
    report.phi_words = ix.phi.words();
    return report;
}

} // namespace wri
