// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 domain failure (graph is not Wheeler), 2 usage or
// I/O problems.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wri/wri.h"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct GraphDeleter {
    void operator()(wri_graph *g) const { wri_graph_free(g); }
};
struct IndexDeleter {
    void operator()(wri_index *ix) const { wri_index_free(ix); }
};
struct ReportDeleter {
    void operator()(wri_report *r) const { wri_report_free(r); }
};
using GraphPtr = std::unique_ptr<wri_graph, GraphDeleter>;
using IndexPtr = std::unique_ptr<wri_index, IndexDeleter>;
using ReportPtr = std::unique_ptr<wri_report, ReportDeleter>;

int report_error(wri_status status) {
    std::cerr << "error: " << wri_last_error() << '\n';
    return status == WRI_ERR_NOT_WHEELER ? kDomainFailure : kUsage;
}

// ASCII character at position k of the map stands for label k.
class LabelMap {
  public:
    explicit LabelMap(const std::string &chars) {
        table_.fill(WRI_NO_LABEL);
        for (std::size_t k = 0; k < chars.size(); ++k) {
            table_[static_cast<unsigned char>(chars[k])] = static_cast<uint32_t>(k);
        }
    }

    std::optional<std::vector<uint32_t>> map(const std::string &text) const {
        std::vector<uint32_t> labels;
        labels.reserve(text.size());
        for (char ch : text) {
            uint32_t label = table_[static_cast<unsigned char>(ch)];
            if (label == WRI_NO_LABEL)
                return std::nullopt;
            labels.push_back(label);
        }
        return labels;
    }

    // unmapped characters become WRI_NO_LABEL, which matches nothing
    std::vector<uint32_t> map_lenient(const std::string &text) const {
        std::vector<uint32_t> labels;
        labels.reserve(text.size());
        for (char ch : text) {
            labels.push_back(table_[static_cast<unsigned char>(ch)]);
        }
        return labels;
    }

  private:
    std::array<uint32_t, 256> table_;
};

int cmd_validate(const std::string &graph_path) {
    wri_graph *raw = nullptr;
    if (auto status = wri_graph_load(graph_path.c_str(), &raw); status != WRI_OK)
        return report_error(status);
    GraphPtr graph(raw);

    wri_report *raw_report = nullptr;
    if (auto status = wri_validate(graph.get(), &raw_report); status != WRI_OK)
        return report_error(status);
    ReportPtr report(raw_report);

    if (wri_report_is_wheeler(report.get())) {
        std::cout << "wheeler\n";
        return kOk;
    }
    for (std::size_t i = 0; i < wri_report_size(report.get()); ++i) {
        std::cout << wri_report_line(report.get(), i) << '\n';
    }
    return kDomainFailure;
}

void print_space(const wri_space_report &s, bool detailed) {
    std::cout << "n=" << s.n << " m=" << s.m << " r=" << s.r << " upsilon=" << s.upsilon
              << " marked=" << s.marked << " J=" << s.phi_samples << '\n';
    if (!detailed)
        return;
    std::cout << "marked_bound=" << s.marked_bound << " (r+4*upsilon)\n"
              << "J_bound=" << s.phi_bound << " (r+8*upsilon+1)\n"
              << "words.rank_select=" << s.rank_select_words << '\n'
              << "words.partial_sums=" << s.partial_sum_words << '\n'
              << "words.toehold=" << s.toehold_words << '\n'
              << "words.phi=" << s.phi_words << '\n'
              << "words.total=" << s.total_words << '\n';
}

int cmd_build(const std::string &graph_path, const std::string &index_path) {
    wri_graph *raw = nullptr;
    if (auto status = wri_graph_load(graph_path.c_str(), &raw); status != WRI_OK)
        return report_error(status);
    GraphPtr graph(raw);

    wri_index *raw_index = nullptr;
    if (auto status = wri_index_build(graph.get(), &raw_index); status != WRI_OK)
        return report_error(status);
    IndexPtr index(raw_index);

    if (auto status = wri_index_save(index.get(), index_path.c_str()); status != WRI_OK)
        return report_error(status);

    wri_space_report space{};
    wri_index_space(index.get(), &space);
    print_space(space, false);
    return kOk;
}

int cmd_stats(const std::string &index_path) {
    wri_index *raw = nullptr;
    if (auto status = wri_index_load(index_path.c_str(), &raw); status != WRI_OK)
        return report_error(status);
    IndexPtr index(raw);
    wri_space_report space{};
    wri_index_space(index.get(), &space);
    print_space(space, true);
    return kOk;
}

int cmd_query(const std::string &index_path,
              const std::string &mode,
              const std::string &patterns_path,
              const LabelMap &label_map) {
    wri_index *raw = nullptr;
    if (auto status = wri_index_load(index_path.c_str(), &raw); status != WRI_OK)
        return report_error(status);
    IndexPtr index(raw);

    std::ifstream file;
    if (!patterns_path.empty()) {
        file.open(patterns_path);
        if (!file) {
            std::cerr << "error: cannot open " << patterns_path << '\n';
            return kUsage;
        }
    }
    std::istream &in = patterns_path.empty() ? std::cin : file;

    std::string line;
    std::string out;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto pattern = label_map.map_lenient(line);
        if (mode == "count") {
            uint64_t k = 0;
            if (auto status = wri_count(index.get(), pattern.data(), pattern.size(), &k);
                    status != WRI_OK)
                return report_error(status);
            out = "count " + std::to_string(k) + "\n";
        } else {
            uint64_t *ids = nullptr;
            size_t k = 0;
            if (auto status = wri_locate(index.get(), pattern.data(), pattern.size(), &ids, &k);
                    status != WRI_OK)
                return report_error(status);
            out = "locate " + std::to_string(k);
            for (size_t i = 0; i < k; ++i) {
                out += ' ';
                out += std::to_string(ids[i]);
            }
            out += '\n';
            wri_free(ids);
        }
        std::fwrite(out.data(), 1, out.size(), stdout);
    }
    return kOk;
}

int cmd_gen(const std::string &family,
            const std::vector<std::string> &args,
            uint64_t seed,
            const std::string &out_path,
            const LabelMap &label_map) {
    std::vector<std::vector<uint32_t>> strings;
    auto need_strings = [&]() -> bool {
        for (const auto &arg : args) {
            auto labels = label_map.map(arg);
            if (!labels) {
                std::cerr << "error: '" << arg << "' has characters outside the label map\n";
                return false;
            }
            strings.push_back(std::move(*labels));
        }
        return true;
    };
    auto need_numbers = [&](std::size_t count, std::vector<uint64_t> &values) -> bool {
        if (args.size() != count) {
            std::cerr << "error: family " << family << " takes " << count << " numeric arguments\n";
            return false;
        }
        try {
            for (const auto &arg : args) {
                std::size_t used = 0;
                values.push_back(std::stoull(arg, &used));
                if (used != arg.size())
                    throw std::invalid_argument(arg);
            }
        } catch (const std::exception &) {
            std::cerr << "error: invalid numeric argument\n";
            return false;
        }
        return true;
    };

    wri_graph *raw = nullptr;
    wri_status status = WRI_OK;
    if (family == "string" || family == "cycle") {
        if (args.size() != 1) {
            std::cerr << "error: family " << family << " takes exactly one string\n";
            return kUsage;
        }
        if (!need_strings())
            return kUsage;
        status = family == "string" ? wri_gen_string(strings[0].data(), strings[0].size(), &raw)
                                    : wri_gen_cycle(strings[0].data(), strings[0].size(), &raw);
    } else if (family == "multi" || family == "trie") {
        if (args.empty()) {
            std::cerr << "error: family " << family << " needs at least one string\n";
            return kUsage;
        }
        if (!need_strings())
            return kUsage;
        std::vector<const uint32_t *> pointers;
        std::vector<size_t> lengths;
        for (const auto &s : strings) {
            pointers.push_back(s.data());
            lengths.push_back(s.size());
        }
        status = family == "multi"
                ? wri_gen_multi(pointers.data(), lengths.data(), strings.size(), &raw)
                : wri_gen_trie(pointers.data(), lengths.data(), strings.size(), &raw);
    } else if (family == "random-string") {
        std::vector<uint64_t> v;
        if (!need_numbers(2, v))
            return kUsage;
        status = wri_gen_random_string(v[0], static_cast<uint32_t>(v[1]), seed, &raw);
    } else if (family == "random-trie") {
        std::vector<uint64_t> v;
        if (!need_numbers(3, v))
            return kUsage;
        status = wri_gen_random_trie(v[0], v[1], static_cast<uint32_t>(v[2]), seed, &raw);
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kUsage;
    }
    if (status != WRI_OK) {
        std::cerr << "error: " << wri_last_error() << '\n';
        return kUsage;
    }
    GraphPtr graph(raw);

    char *text = nullptr;
    size_t length = 0;
    if (auto s = wri_graph_to_wgf(graph.get(), &text, &length); s != WRI_OK)
        return report_error(s);
    std::unique_ptr<char, decltype(&wri_free)> owned(text, &wri_free);

    wri_graph_info info{};
    wri_graph_info_get(graph.get(), &info);
    const std::string summary = "n=" + std::to_string(info.n) + " m=" + std::to_string(info.m)
            + " upsilon=" + std::to_string(info.upsilon) + "\n";

    if (out_path.empty()) {
        std::fwrite(text, 1, length, stdout);
        std::cerr << summary;
        return kOk;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    out.write(text, static_cast<std::streamsize>(length));
    if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kUsage;
    }
    std::cout << summary;
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{ "Wheeler graph r-index: build, query and inspect compressed graph indexes" };
    app.require_subcommand(1);

    std::string map_chars = "abcdefghijklmnopqrstuvwxyz";
    app.add_option("--map", map_chars,
                   "characters standing for labels 0,1,2,... (default a-z)")
            ->capture_default_str();

    std::string graph_path;
    std::string index_path;

    auto *validate = app.add_subcommand("validate", "check the Wheeler axioms for a WGF graph");
    validate->add_option("graph", graph_path, "WGF file")->required();

    auto *build = app.add_subcommand("build", "build an index from a WGF graph");
    build->add_option("graph", graph_path, "WGF file")->required();
    build->add_option("index", index_path, "output index file")->required();

    std::string mode;
    std::string patterns_path;
    auto *query = app.add_subcommand("query", "answer count or locate queries, one pattern per line");
    query->add_option("index", index_path, "index file")->required();
    query->add_option("--mode", mode, "count or locate")
            ->required()
            ->check(CLI::IsMember({ "count", "locate" }));
    query->add_option("--patterns", patterns_path, "pattern file (default: stdin)");

    std::string family;
    std::vector<std::string> gen_args;
    uint64_t seed = 1;
    std::string out_path;
    auto *gen = app.add_subcommand(
            "gen", "generate a Wheeler graph: string|cycle|multi|trie <strings...>, "
                   "random-string <length> <sigma>, random-trie <count> <max_length> <sigma>");
    gen->add_option("family", family, "graph family")->required();
    gen->add_option("args", gen_args, "family arguments");
    gen->add_option("--seed", seed, "seed for random families")->capture_default_str();
    gen->add_option("-o,--output", out_path, "output WGF file (default: stdout)");

    auto *stats = app.add_subcommand("stats", "print index size statistics and space bounds");
    stats->add_option("index", index_path, "index file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    const LabelMap label_map(map_chars);
    if (validate->parsed())
        return cmd_validate(graph_path);
    if (build->parsed())
        return cmd_build(graph_path, index_path);
    if (query->parsed())
        return cmd_query(index_path, mode, patterns_path, label_map);
    if (gen->parsed())
        return cmd_gen(family, gen_args, seed, out_path, label_map);
    if (stats->parsed())
        return cmd_stats(index_path);
    return kUsage;
}
