#include "wri/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "wri/error.hpp"

namespace wri {

WheelerGraph make_graph(std::uint64_t n, std::vector<Edge> edges) {
    WheelerGraph g;
    g.n = n;
    g.edges = std::move(edges);
    for (const Edge &e : g.edges) {
        g.sigma = std::max<Label>(g.sigma, e.label + 1);
    }
    return g;
}

std::vector<std::uint64_t> in_degrees(const WheelerGraph &g) {
    std::vector<std::uint64_t> deg(g.n, 0);
    for (const Edge &e : g.edges) {
        ++deg[e.dst];
    }
    return deg;
}

std::vector<std::uint64_t> out_degrees(const WheelerGraph &g) {
    std::vector<std::uint64_t> deg(g.n, 0);
    for (const Edge &e : g.edges) {
        ++deg[e.src];
    }
    return deg;
}

std::vector<std::uint64_t> bwt_edge_order(const WheelerGraph &g) {
    std::vector<std::uint64_t> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        const Edge &x = g.edges[a];
        const Edge &y = g.edges[b];
        return x.src != y.src ? x.src < y.src : x.dst < y.dst;
    });
    return order;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t next = line.find(' ', pos);
        if (next == std::string_view::npos)
            next = line.size();
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no, const char *what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(field) + "'");
    return value;
}

} // namespace

WheelerGraph parse_graph(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#')
            continue;
        lines.emplace_back(line_no, line);
    }

    auto header = [&](std::size_t idx, std::string_view key) -> std::uint64_t {
        if (idx >= lines.size())
            throw ParseError(line_no, "missing '" + std::string(key) + "' line");
        auto [no, line] = lines[idx];
        auto fields = split_fields(line);
        if (fields.size() != 2 || fields[0] != key)
            throw ParseError(no, "expected '" + std::string(key) + " <count>'");
        return parse_number(fields[1], no, "count");
    };

    const std::uint64_t n = header(0, "n");
    if (n == 0)
        throw ParseError(lines[0].first, "graph must have at least one vertex");
    const std::uint64_t m = header(1, "m");
    if (lines.size() - 2 != m) {
        std::size_t at = lines.size() - 2 < m ? line_no : lines[2 + m].first;
        throw ParseError(at, "expected " + std::to_string(m) + " edge lines, found "
                                 + std::to_string(lines.size() - 2));
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        auto [no, line] = lines[i];
        auto fields = split_fields(line);
        if (fields.size() != 4 || fields[0] != "e")
            throw ParseError(no, "expected 'e <src> <dst> <label>'");
        const std::uint64_t src = parse_number(fields[1], no, "source");
        const std::uint64_t dst = parse_number(fields[2], no, "destination");
        const std::uint64_t label = parse_number(fields[3], no, "label");
        if (src >= n)
            throw ParseError(no, "source rank " + std::to_string(src) + " >= n");
        if (dst >= n)
            throw ParseError(no, "destination rank " + std::to_string(dst) + " >= n");
        if (label >= std::numeric_limits<Label>::max())
            throw ParseError(no, "label " + std::to_string(label) + " out of range");
        edges.push_back({ src, dst, static_cast<Label>(label) });
    }
    return make_graph(n, std::move(edges));
}

WheelerGraph load_graph(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string to_wgf(const WheelerGraph &g) {
    std::string out = "n " + std::to_string(g.n) + "\nm " + std::to_string(g.m()) + "\n";
    for (const Edge &e : g.edges) {
        out += "e " + std::to_string(e.src) + " " + std::to_string(e.dst) + " "
                + std::to_string(e.label) + "\n";
    }
    return out;
}

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::InDegreeZeroFirst: return "A0";
        case Axiom::LabelOrder: return "A1";
        case Axiom::SourceOrder: return "A2";
    }
    return "?";
}

ValidationReport validate_wheeler(const WheelerGraph &g) {
    ValidationReport report;

    // A0: every in-degree-0 vertex ranks below the first vertex with incoming edges
    auto in_deg = in_degrees(g);
    auto first_reached = std::find_if(in_deg.begin(), in_deg.end(),
                                      [](std::uint64_t d) { return d > 0; });
    if (first_reached != in_deg.end()) {
        const Rank p = first_reached - in_deg.begin();
        for (Rank v = p + 1; v < g.n; ++v) {
            if (in_deg[v] == 0)
                report.violations.push_back({ Axiom::InDegreeZeroFirst, v, p });
        }
    }

    // A1/A2: with edges sorted by (label, src, dst), destinations must not
    // decrease across sources within a label and must strictly increase
    // across labels.
    std::vector<std::uint64_t> order(g.m());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
        const Edge &x = g.edges[a];
        const Edge &y = g.edges[b];
        if (x.label != y.label)
            return x.label < y.label;
        if (x.src != y.src)
            return x.src < y.src;
        if (x.dst != y.dst)
            return x.dst < y.dst;
        return a < b;
    });

    std::size_t group_begin = 0;
    std::uint64_t prev_label_max = 0; // edge index holding max dst of the previous label
    bool have_prev_label = false;
    while (group_begin < order.size()) {
        const Label label = g.edges[order[group_begin]].label;
        std::size_t group_end = group_begin;
        std::uint64_t max_edge = order[group_begin];
        std::uint64_t min_edge = order[group_begin];
        while (group_end < order.size() && g.edges[order[group_end]].label == label) {
            const std::uint64_t idx = order[group_end];
            if (g.edges[idx].dst > g.edges[max_edge].dst)
                max_edge = idx;
            if (g.edges[idx].dst < g.edges[min_edge].dst)
                min_edge = idx;
            if (group_end > group_begin) {
                const Edge &prev = g.edges[order[group_end - 1]];
                const Edge &cur = g.edges[idx];
                if (prev.src != cur.src && prev.dst > cur.dst)
                    report.violations.push_back({ Axiom::SourceOrder, order[group_end - 1], idx });
            }
            ++group_end;
        }
        if (have_prev_label && g.edges[prev_label_max].dst >= g.edges[min_edge].dst)
            report.violations.push_back({ Axiom::LabelOrder, prev_label_max, min_edge });
        prev_label_max = max_edge;
        have_prev_label = true;
        group_begin = group_end;
    }

    report.is_wheeler = report.violations.empty();
    return report;
}

std::string describe(const WheelerGraph &g, const Violation &v) {
    std::ostringstream out;
    out << axiom_name(v.axiom);
    if (v.axiom == Axiom::InDegreeZeroFirst) {
        out << " vertex " << v.first << " has in-degree 0 but follows vertex " << v.second
            << " with positive in-degree";
        return out.str();
    }
    auto edge = [&](std::uint64_t idx) {
        const Edge &e = g.edges[idx];
        out << "edge " << e.src << "->" << e.dst << " [" << e.label << "]";
    };
    out << ' ';
    edge(v.first);
    out << " vs ";
    edge(v.second);
    return out.str();
}

std::vector<bool> PathDecomposition::endpoints(std::uint64_t n) const {
    std::vector<bool> result(n, false);
    for (const auto &path : paths) {
        result[path.front()] = true;
        result[path.back()] = true;
    }
    return result;
}

PathDecomposition decompose_paths(const WheelerGraph &g) {
    const auto in_deg = in_degrees(g);
    const auto out_deg = out_degrees(g);
    const auto order = bwt_edge_order(g);

    // position of each edge in B, and the B-position of each vertex's first out-edge
    std::vector<std::uint64_t> bwt_pos(g.m());
    std::vector<std::uint64_t> first_out(g.n, 0);
    for (std::uint64_t p = g.m(); p-- > 0;) {
        bwt_pos[order[p]] = p;
        first_out[g.edges[order[p]].src] = p;
    }

    auto chains_through = [&](Rank v) { return in_deg[v] == 1 && out_deg[v] == 1; };

    struct Pending {
        Rank start;
        std::uint64_t first_edge_pos; // B-position, or m for isolated vertices
        std::vector<Rank> vertices;
        std::vector<std::uint64_t> edges;
    };
    std::vector<Pending> pending;
    std::vector<bool> used(g.m(), false);

    auto walk = [&](std::uint64_t edge_idx) {
        Pending path{ g.edges[edge_idx].src, bwt_pos[edge_idx], { g.edges[edge_idx].src }, {} };
        std::uint64_t cur = edge_idx;
        while (true) {
            used[cur] = true;
            path.edges.push_back(cur);
            const Rank v = g.edges[cur].dst;
            path.vertices.push_back(v);
            if (!chains_through(v))
                break;
            const std::uint64_t next = order[first_out[v]];
            if (used[next])
                break; // closed a cycle at its cut vertex
            cur = next;
        }
        pending.push_back(std::move(path));
    };

    for (std::uint64_t p = 0; p < g.m(); ++p) {
        const std::uint64_t idx = order[p];
        if (!chains_through(g.edges[idx].src))
            walk(idx);
    }
    // whatever remains lies on cycles of in=out=1 vertices; B-order visits
    // sources by increasing rank, so the first unused edge starts at the
    // cycle's minimum-rank vertex
    for (std::uint64_t p = 0; p < g.m(); ++p) {
        if (!used[order[p]])
            walk(order[p]);
    }
    for (Rank v = 0; v < g.n; ++v) {
        if (in_deg[v] == 0 && out_deg[v] == 0)
            pending.push_back({ v, g.m(), { v }, {} });
    }

    std::sort(pending.begin(), pending.end(), [](const Pending &a, const Pending &b) {
        return a.start != b.start ? a.start < b.start : a.first_edge_pos < b.first_edge_pos;
    });

    PathDecomposition d;
    d.paths.reserve(pending.size());
    d.path_edges.reserve(pending.size());
    for (auto &path : pending) {
        d.paths.push_back(std::move(path.vertices));
        d.path_edges.push_back(std::move(path.edges));
    }
    return d;
}

IdAssignment assign_identifiers(const WheelerGraph &g, const PathDecomposition &d) {
    constexpr VertexId unassigned = std::numeric_limits<VertexId>::max();
    IdAssignment ids;
    ids.id_of_rank.assign(g.n, unassigned);
    ids.rank_of_id.assign(g.n, 0);

    VertexId next = 0;
    for (const auto &path : d.paths) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            ids.id_of_rank[path[i]] = next++;
        }
    }
    for (Rank v = 0; v < g.n; ++v) {
        if (ids.id_of_rank[v] == unassigned)
            ids.id_of_rank[v] = next++;
    }
    if (next != g.n)
        throw InvariantViolation("identifier assignment is not a bijection");
    for (Rank v = 0; v < g.n; ++v) {
        ids.rank_of_id[ids.id_of_rank[v]] = v;
    }
    return ids;
}

} // namespace wri
