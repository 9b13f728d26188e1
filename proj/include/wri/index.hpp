#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wri/bwt.hpp"
#include "wri/graph.hpp"

namespace wri {

struct IdPair {
    VertexId src;
    VertexId dst;

    bool operator==(const IdPair &) const = default;
};

/**
 * Identifiers of the endpoints of selected edges, keyed by B position.
 *
 * A position p holding edge (u,v) is marked iff p ends a run of B, or u or v
 * is an endpoint of a decomposition path, or the vertex ranked right after u
 * has out-degree 0. The marked positions are kept sorted so membership and
 * lookup are binary searches.
 */
class ToeholdTable {
  public:
    ToeholdTable() = default;
    ToeholdTable(std::vector<std::uint64_t> positions, std::vector<IdPair> pairs);

    bool is_marked(std::uint64_t pos) const;
    std::optional<IdPair> lookup(std::uint64_t pos) const;

    std::uint64_t num_marked() const { return positions_.size(); }
    const std::vector<std::uint64_t> &positions() const { return positions_; }
    const std::vector<IdPair> &pairs() const { return pairs_; }

    std::uint64_t words() const { return positions_.size() + 2 * pairs_.size(); }

    bool operator==(const ToeholdTable &) const = default;

  private:
    std::vector<std::uint64_t> positions_;
    std::vector<IdPair> pairs_;
};

ToeholdTable build_toehold(const WheelerGraph &g,
                           const PathDecomposition &d,
                           const IdAssignment &ids,
                           const GraphBwt &bwt);

/**
 * Sparse representation of phi, the map from a vertex identifier to the
 * identifier of the vertex ranked immediately before it.
 *
 * Identifiers outside the stored set are resolved through their successor j
 * in the set: phi(i) = satellite(j) - (j - i).
 */
class PhiStructure {
  public:
    static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

    PhiStructure() = default;
    PhiStructure(std::vector<VertexId> sampled, std::vector<VertexId> satellite);

    const std::vector<VertexId> &sampled() const { return sampled_; }
    const std::vector<VertexId> &satellite() const { return satellite_; }
    std::uint64_t size() const { return sampled_.size(); }
    bool contains(VertexId id) const;

    // index into sampled() of the smallest sampled id >= id, if any
    std::optional<std::size_t> successor(VertexId id) const;

    std::uint64_t words() const { return sampled_.size() + satellite_.size(); }

    bool operator==(const PhiStructure &) const = default;

  private:
    std::vector<VertexId> sampled_;
    std::vector<VertexId> satellite_;
};

PhiStructure build_phi(const WheelerGraph &g,
                       const PathDecomposition &d,
                       const IdAssignment &ids,
                       const GraphBwt &bwt);

struct WheelerRIndex {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    Label sigma = 0;
    std::uint64_t r = 0;
    std::uint64_t upsilon = 0;
    // identifier of the last vertex in the order; starts the phi chain for
    // the empty pattern
    VertexId last_id = 0;

    RLSequence bwt;
    DegreeSums sums;
    ToeholdTable toehold;
    PhiStructure phi;

    bool operator==(const WheelerRIndex &) const = default;
};

// Validates, decomposes, assigns identifiers, then builds every component.
// Throws NotWheelerError on invalid input.
WheelerRIndex build_index(const WheelerGraph &g);

struct SpaceReport {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t r = 0;
    std::uint64_t upsilon = 0;
    std::uint64_t marked = 0;
    std::uint64_t phi_samples = 0;

    std::uint64_t rank_select_words = 0;
    std::uint64_t partial_sum_words = 0;
    std::uint64_t toehold_words = 0;
    std::uint64_t phi_words = 0;

    // empirical forms of the O(r + upsilon) bounds
    std::uint64_t marked_bound() const { return r + 4 * upsilon; }
    std::uint64_t phi_bound() const { return r + 8 * upsilon + 1; }
    std::uint64_t total_words() const {
        return rank_select_words + partial_sum_words + toehold_words + phi_words;
    }
};

SpaceReport space_report(const WheelerRIndex &ix);

// Little-endian binary container, see serialize.cpp for the layout.
void serialize(const WheelerRIndex &ix, std::ostream &out);
WheelerRIndex deserialize(std::istream &in);
std::string serialize_to_string(const WheelerRIndex &ix);
WheelerRIndex deserialize_from_string(const std::string &bytes);

void save_index(const WheelerRIndex &ix, const std::string &path);
WheelerRIndex load_index(const std::string &path);

} // namespace wri
