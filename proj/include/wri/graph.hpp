#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wri {

using Label = std::uint32_t;
using Rank = std::uint64_t;
using VertexId = std::uint64_t;

struct Edge {
    Rank src;
    Rank dst;
    Label label;

    bool operator==(const Edge &) const = default;
};

/**
 * Edge-labelled directed multigraph. Vertices are named by their rank in the
 * claimed Wheeler order, so the input numbering is the order being indexed.
 */
struct WheelerGraph {
    std::uint64_t n = 0;
    std::vector<Edge> edges;
    // 1 + max label, 0 without edges
    Label sigma = 0;

    std::uint64_t m() const { return edges.size(); }

    bool operator==(const WheelerGraph &) const = default;
};

// Builds a graph and derives sigma from the edge labels.
WheelerGraph make_graph(std::uint64_t n, std::vector<Edge> edges);

std::vector<std::uint64_t> in_degrees(const WheelerGraph &g);
std::vector<std::uint64_t> out_degrees(const WheelerGraph &g);

// Edge indices sorted by (src, dst, input position): the order in which edge
// labels appear in the graph BWT.
std::vector<std::uint64_t> bwt_edge_order(const WheelerGraph &g);

// WGF: "n <N>", "m <M>", then M lines "e <src> <dst> <label>"; '#' lines are
// comments. Throws ParseError carrying the offending line number.
WheelerGraph parse_graph(std::string_view text);
WheelerGraph load_graph(const std::string &path);
std::string to_wgf(const WheelerGraph &g);

enum class Axiom {
    // in-degree 0 vertices precede all vertices with positive in-degree
    InDegreeZeroFirst,
    // a < a' implies v < v'
    LabelOrder,
    // a == a' and u < u' implies v <= v'
    SourceOrder,
};

std::string_view axiom_name(Axiom axiom);

struct Violation {
    Axiom axiom;
    // For InDegreeZeroFirst: first = in-degree-0 vertex, second = earlier
    // vertex with positive in-degree. Otherwise indices into g.edges.
    std::uint64_t first;
    std::uint64_t second;
};

struct ValidationReport {
    bool is_wheeler = true;
    std::vector<Violation> violations;
};

ValidationReport validate_wheeler(const WheelerGraph &g);

// Human-readable single line for a violation, e.g. "A2 edge 1->3 [0] vs edge 3->2 [0]".
std::string describe(const WheelerGraph &g, const Violation &v);

/**
 * Edge-disjoint cover of the graph by directed paths whose internal vertices
 * have in- and out-degree exactly 1. Each path is a vertex sequence; its edge
 * list holds the indices into WheelerGraph::edges, one fewer than vertices.
 * Isolated vertices form single-vertex paths.
 */
struct PathDecomposition {
    std::vector<std::vector<Rank>> paths;
    std::vector<std::vector<std::uint64_t>> path_edges;

    std::uint64_t upsilon() const { return paths.size(); }

    // endpoint[v] is true iff v is the first or last vertex of some path
    std::vector<bool> endpoints(std::uint64_t n) const;

    bool operator==(const PathDecomposition &) const = default;
};

// Chains edge (u,v) to (v,w) iff in(v) = out(v) = 1. Cycles of such vertices
// are cut at their minimum-rank vertex. Paths are ordered by start rank, then
// by the B-order of their first edge.
PathDecomposition decompose_paths(const WheelerGraph &g);

struct IdAssignment {
    std::vector<VertexId> id_of_rank;
    std::vector<Rank> rank_of_id;

    bool operator==(const IdAssignment &) const = default;
};

// Internal path vertices receive consecutive identifiers in path order, so
// an edge between two internal vertices goes from id i to id i + 1. Endpoints
// and isolated vertices take the remaining identifiers in rank order.
IdAssignment assign_identifiers(const WheelerGraph &g, const PathDecomposition &d);

} // namespace wri
