#include "wri/wri.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "wri/error.hpp"
#include "wri/generators.hpp"
#include "wri/graph.hpp"
#include "wri/index.hpp"
#include "wri/query.hpp"

struct wri_graph {
    wri::WheelerGraph graph;
};

struct wri_report {
    bool is_wheeler;
    std::vector<std::string> lines;
};

struct wri_index {
    wri::WheelerRIndex index;
};

namespace {

thread_local std::string last_error;

wri_status fail(wri_status status, const char *what) {
    last_error = what;
    return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
wri_status guarded(Body &&body) {
    try {
        body();
        return WRI_OK;
    } catch (const wri::ParseError &e) {
        return fail(WRI_ERR_PARSE, e.what());
    } catch (const wri::NotWheelerError &e) {
        return fail(WRI_ERR_NOT_WHEELER, e.what());
    } catch (const wri::FormatError &e) {
        return fail(WRI_ERR_FORMAT, e.what());
    } catch (const wri::FirstInOrderError &e) {
        return fail(WRI_ERR_FIRST_IN_ORDER, e.what());
    } catch (const wri::InvariantViolation &e) {
        return fail(WRI_ERR_INVARIANT, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(WRI_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(WRI_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(WRI_ERR_INTERNAL, "out of memory");
    } catch (const std::runtime_error &e) {
        return fail(WRI_ERR_IO, e.what());
    } catch (const std::exception &e) {
        return fail(WRI_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WRI_ERR_INTERNAL, "unknown error");
    }
}

#define WRI_REQUIRE(cond)                                                         \
    do {                                                                          \
        if (!(cond))                                                              \
            return fail(WRI_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);    \
    } while (0)

template <typename T>
T *copy_to_malloc(const T *data, std::size_t count) {
    // one spare byte so text callers can NUL-terminate
    auto *out = static_cast<T *>(std::malloc(count * sizeof(T) + 1));
    if (!out)
        throw std::bad_alloc();
    if (count)
        std::memcpy(out, data, count * sizeof(T));
    return out;
}

std::vector<wri::LabelString> gather(const uint32_t *const *strings, const size_t *lengths,
                                     size_t count) {
    std::vector<wri::LabelString> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (lengths[i] && !strings[i])
            throw std::invalid_argument("null string with non-zero length");
        out.emplace_back(strings[i], strings[i] + lengths[i]);
    }
    return out;
}

wri_status emit_graph(wri::GeneratedInstance instance, wri_graph **out) {
    *out = new wri_graph{ std::move(instance.graph) };
    return WRI_OK;
}

} // namespace

extern "C" {

const char *wri_last_error(void) {
    return last_error.c_str();
}

const char *wri_status_string(wri_status status) {
    switch (status) {
        case WRI_OK: return "ok";
        case WRI_ERR_INVALID_ARGUMENT: return "invalid argument";
        case WRI_ERR_IO: return "i/o error";
        case WRI_ERR_PARSE: return "parse error";
        case WRI_ERR_NOT_WHEELER: return "not a Wheeler graph";
        case WRI_ERR_FORMAT: return "bad index format";
        case WRI_ERR_FIRST_IN_ORDER: return "first vertex in order";
        case WRI_ERR_INVARIANT: return "internal invariant violated";
        case WRI_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void wri_free(void *ptr) {
    std::free(ptr);
}

wri_status wri_graph_parse(const char *text, size_t length, wri_graph **out) {
    WRI_REQUIRE(out);
    WRI_REQUIRE(text || length == 0);
    return guarded([&] {
        *out = new wri_graph{ wri::parse_graph(std::string_view(text ? text : "", length)) };
    });
}

wri_status wri_graph_load(const char *path, wri_graph **out) {
    WRI_REQUIRE(path && out);
    return guarded([&] { *out = new wri_graph{ wri::load_graph(path) }; });
}

wri_status wri_graph_info_get(const wri_graph *graph, wri_graph_info *out) {
    WRI_REQUIRE(graph && out);
    return guarded([&] {
        out->n = graph->graph.n;
        out->m = graph->graph.m();
        out->sigma = graph->graph.sigma;
        out->upsilon = wri::decompose_paths(graph->graph).upsilon();
    });
}

wri_status wri_graph_to_wgf(const wri_graph *graph, char **text, size_t *length) {
    WRI_REQUIRE(graph && text);
    return guarded([&] {
        const std::string wgf = wri::to_wgf(graph->graph);
        *text = copy_to_malloc(wgf.data(), wgf.size());
        (*text)[wgf.size()] = '\0';
        if (length)
            *length = wgf.size();
    });
}

void wri_graph_free(wri_graph *graph) {
    delete graph;
}

wri_status wri_gen_string(const uint32_t *labels, size_t length, wri_graph **out) {
    WRI_REQUIRE(out && (labels || length == 0));
    return guarded([&] {
        emit_graph(wri::gen_string_path(std::span<const uint32_t>(labels, length)), out);
    });
}

wri_status wri_gen_cycle(const uint32_t *labels, size_t length, wri_graph **out) {
    WRI_REQUIRE(out && (labels || length == 0));
    return guarded([&] {
        emit_graph(wri::gen_string_cycle(std::span<const uint32_t>(labels, length)), out);
    });
}

wri_status wri_gen_multi(const uint32_t *const *strings, const size_t *lengths, size_t count,
                         wri_graph **out) {
    WRI_REQUIRE(out && ((strings && lengths) || count == 0));
    return guarded([&] { emit_graph(wri::gen_multi_paths(gather(strings, lengths, count)), out); });
}

wri_status wri_gen_trie(const uint32_t *const *strings, const size_t *lengths, size_t count,
                        wri_graph **out) {
    WRI_REQUIRE(out && ((strings && lengths) || count == 0));
    return guarded([&] { emit_graph(wri::gen_trie(gather(strings, lengths, count)), out); });
}

wri_status wri_gen_random_string(uint64_t length, uint32_t sigma, uint64_t seed, wri_graph **out) {
    WRI_REQUIRE(out);
    return guarded([&] {
        emit_graph(wri::gen_string_path(wri::random_string(length, sigma, seed)), out);
    });
}

wri_status wri_gen_random_trie(uint64_t count, uint64_t max_length, uint32_t sigma, uint64_t seed,
                               wri_graph **out) {
    WRI_REQUIRE(out);
    return guarded([&] { emit_graph(wri::gen_random_trie(count, max_length, sigma, seed), out); });
}

wri_status wri_validate(const wri_graph *graph, wri_report **out) {
    WRI_REQUIRE(graph && out);
    return guarded([&] {
        auto report = wri::validate_wheeler(graph->graph);
        auto *result = new wri_report{ report.is_wheeler, {} };
        for (const auto &v : report.violations) {
            result->lines.push_back(wri::describe(graph->graph, v));
        }
        *out = result;
    });
}

int wri_report_is_wheeler(const wri_report *report) {
    return report && report->is_wheeler ? 1 : 0;
}

size_t wri_report_size(const wri_report *report) {
    return report ? report->lines.size() : 0;
}

const char *wri_report_line(const wri_report *report, size_t index) {
    if (!report || index >= report->lines.size())
        return nullptr;
    return report->lines[index].c_str();
}

void wri_report_free(wri_report *report) {
    delete report;
}

wri_status wri_index_build(const wri_graph *graph, wri_index **out) {
    WRI_REQUIRE(graph && out);
    return guarded([&] { *out = new wri_index{ wri::build_index(graph->graph) }; });
}

wri_status wri_index_save(const wri_index *index, const char *path) {
    WRI_REQUIRE(index && path);
    return guarded([&] { wri::save_index(index->index, path); });
}

wri_status wri_index_load(const char *path, wri_index **out) {
    WRI_REQUIRE(path && out);
    return guarded([&] { *out = new wri_index{ wri::load_index(path) }; });
}

wri_status wri_index_serialize(const wri_index *index, uint8_t **bytes, size_t *length) {
    WRI_REQUIRE(index && bytes && length);
    return guarded([&] {
        const std::string data = wri::serialize_to_string(index->index);
        *bytes = copy_to_malloc(reinterpret_cast<const uint8_t *>(data.data()), data.size());
        *length = data.size();
    });
}

wri_status wri_index_deserialize(const uint8_t *bytes, size_t length, wri_index **out) {
    WRI_REQUIRE(out && (bytes || length == 0));
    return guarded([&] {
        std::string data(reinterpret_cast<const char *>(bytes), length);
        *out = new wri_index{ wri::deserialize_from_string(data) };
    });
}

wri_status wri_index_space(const wri_index *index, wri_space_report *out) {
    WRI_REQUIRE(index && out);
    return guarded([&] {
        const auto report = wri::space_report(index->index);
        out->n = report.n;
        out->m = report.m;
        out->r = report.r;
        out->upsilon = report.upsilon;
        out->marked = report.marked;
        out->phi_samples = report.phi_samples;
        out->marked_bound = report.marked_bound();
        out->phi_bound = report.phi_bound();
        out->rank_select_words = report.rank_select_words;
        out->partial_sum_words = report.partial_sum_words;
        out->toehold_words = report.toehold_words;
        out->phi_words = report.phi_words;
        out->total_words = report.total_words();
    });
}

void wri_index_free(wri_index *index) {
    delete index;
}

wri_status wri_count(const wri_index *index, const uint32_t *pattern, size_t length,
                     uint64_t *count) {
    WRI_REQUIRE(index && count && (pattern || length == 0));
    return guarded([&] {
        *count = wri::count(index->index, std::span<const uint32_t>(pattern, length));
    });
}

wri_status wri_locate(const wri_index *index, const uint32_t *pattern, size_t length,
                      uint64_t **ids, size_t *count) {
    WRI_REQUIRE(index && ids && count && (pattern || length == 0));
    return guarded([&] {
        const auto found = wri::locate(index->index, std::span<const uint32_t>(pattern, length));
        *ids = found.empty() ? nullptr : copy_to_malloc(found.data(), found.size());
        *count = found.size();
    });
}

wri_status wri_phi(const wri_index *index, uint64_t id, uint64_t *out) {
    WRI_REQUIRE(index && out);
    return guarded([&] { *out = wri::phi(index->index, id); });
}

} // extern "C"
