/*
 * C interface to the Wheeler graph r-index.
 *
 * Objects are opaque handles created by wri_*_new/build/load/parse calls and
 * released with the matching *_free call. Every fallible call returns a
 * wri_status; on failure wri_last_error() describes the problem (the message
 * is thread-local and valid until the next failing call on that thread).
 * Arrays returned through out-parameters are owned by the caller and must be
 * released with wri_free().
 *
 * Built indexes are immutable; concurrent queries on one index are safe.
 */
#ifndef WRI_H
#define WRI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define WRI_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define WRI_API __attribute__((visibility("default")))
#else
#  define WRI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wri_status {
    WRI_OK = 0,
    WRI_ERR_INVALID_ARGUMENT = 1,
    WRI_ERR_IO = 2,
    WRI_ERR_PARSE = 3,
    WRI_ERR_NOT_WHEELER = 4,
    WRI_ERR_FORMAT = 5,
    WRI_ERR_FIRST_IN_ORDER = 6,
    WRI_ERR_INVARIANT = 7,
    WRI_ERR_INTERNAL = 8
} wri_status;

/* Label value that never occurs in a graph; patterns may use it for
 * characters outside the alphabet. */
#define WRI_NO_LABEL UINT32_MAX

typedef struct wri_graph wri_graph;
typedef struct wri_report wri_report;
typedef struct wri_index wri_index;

typedef struct wri_graph_info {
    uint64_t n;
    uint64_t m;
    uint32_t sigma;
    uint64_t upsilon;
} wri_graph_info;

typedef struct wri_space_report {
    uint64_t n;
    uint64_t m;
    uint64_t r;
    uint64_t upsilon;
    uint64_t marked;
    uint64_t phi_samples;
    uint64_t marked_bound;   /* r + 4 upsilon */
    uint64_t phi_bound;      /* r + 8 upsilon + 1 */
    uint64_t rank_select_words;
    uint64_t partial_sum_words;
    uint64_t toehold_words;
    uint64_t phi_words;
    uint64_t total_words;
} wri_space_report;

WRI_API const char *wri_last_error(void);
WRI_API const char *wri_status_string(wri_status status);
WRI_API void wri_free(void *ptr);

/* graphs */
WRI_API wri_status wri_graph_parse(const char *text, size_t length, wri_graph **out);
WRI_API wri_status wri_graph_load(const char *path, wri_graph **out);
WRI_API wri_status wri_graph_info_get(const wri_graph *graph, wri_graph_info *out);
/* WGF text, NUL-terminated; release with wri_free */
WRI_API wri_status wri_graph_to_wgf(const wri_graph *graph, char **text, size_t *length);
WRI_API void wri_graph_free(wri_graph *graph);

/* generators; strings are label arrays */
WRI_API wri_status wri_gen_string(const uint32_t *labels, size_t length, wri_graph **out);
WRI_API wri_status wri_gen_cycle(const uint32_t *labels, size_t length, wri_graph **out);
WRI_API wri_status wri_gen_multi(const uint32_t *const *strings, const size_t *lengths,
                                 size_t count, wri_graph **out);
WRI_API wri_status wri_gen_trie(const uint32_t *const *strings, const size_t *lengths,
                                size_t count, wri_graph **out);
WRI_API wri_status wri_gen_random_string(uint64_t length, uint32_t sigma, uint64_t seed,
                                         wri_graph **out);
WRI_API wri_status wri_gen_random_trie(uint64_t count, uint64_t max_length, uint32_t sigma,
                                       uint64_t seed, wri_graph **out);

/* Wheeler validation */
WRI_API wri_status wri_validate(const wri_graph *graph, wri_report **out);
WRI_API int wri_report_is_wheeler(const wri_report *report);
WRI_API size_t wri_report_size(const wri_report *report);
/* one violation as text; NULL when index is out of range */
WRI_API const char *wri_report_line(const wri_report *report, size_t index);
WRI_API void wri_report_free(wri_report *report);

/* indexes */
WRI_API wri_status wri_index_build(const wri_graph *graph, wri_index **out);
WRI_API wri_status wri_index_save(const wri_index *index, const char *path);
WRI_API wri_status wri_index_load(const char *path, wri_index **out);
WRI_API wri_status wri_index_serialize(const wri_index *index, uint8_t **bytes, size_t *length);
WRI_API wri_status wri_index_deserialize(const uint8_t *bytes, size_t length, wri_index **out);
WRI_API wri_status wri_index_space(const wri_index *index, wri_space_report *out);
WRI_API void wri_index_free(wri_index *index);

/* queries; labels >= sigma (including WRI_NO_LABEL) simply never match */
WRI_API wri_status wri_count(const wri_index *index, const uint32_t *pattern, size_t length,
                             uint64_t *count);
/* identifiers in phi-chain order, last vertex first; *ids is NULL when
 * nothing matches */
WRI_API wri_status wri_locate(const wri_index *index, const uint32_t *pattern, size_t length,
                              uint64_t **ids, size_t *count);
WRI_API wri_status wri_phi(const wri_index *index, uint64_t id, uint64_t *out);

#ifdef __cplusplus
}
#endif

#endif /* WRI_H */
