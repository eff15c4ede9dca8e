#ifndef STEMRANK_H
#define STEMRANK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result of every fallible call.
 */
typedef enum StemrankStatus {
  STEMRANK_STATUS_OK = 0,
  STEMRANK_STATUS_NULL_POINTER = 1,
  STEMRANK_STATUS_INVALID_UTF8 = 2,
  STEMRANK_STATUS_IO = 3,
  STEMRANK_STATUS_PARSE = 4,
  STEMRANK_STATUS_ALIGNMENT = 5,
  STEMRANK_STATUS_EMPTY_CANDIDATES = 6,
  STEMRANK_STATUS_INVALID_ARGUMENT = 7,
  STEMRANK_STATUS_VALIDATION = 8,
  STEMRANK_STATUS_PANIC = 9,
} StemrankStatus;

/*
 A trigram language model.
 */
typedef struct StemrankModel StemrankModel;

/*
 A candidate ranker.
 */
typedef struct StemrankRanker StemrankRanker;

/*
 A suffix stemmer with its lexicon.
 */
typedef struct StemrankStemmer StemrankStemmer;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version as a static string.
 */
const char *stemrank_version(void);

/*
 Message for the last failed call on this thread, or NULL. The pointer is
 valid until the next library call on the same thread.
 */
const char *stemrank_last_error_message(void);

/*
 Releases a string returned by the library. NULL is ignored.
 */
void stemrank_string_free(char *s);

/*
 Loads a model file written by `stemrank build-lm` or
 [`stemrank_model_save`].
 */
enum StemrankStatus stemrank_model_load(const char *path, struct StemrankModel **out);

/*
 Counts a one-sentence-per-line corpus. With `case_fold`, tokens are
 lowercased first.
 */
enum StemrankStatus stemrank_model_build(const char *corpus_path,
                                         bool case_fold,
                                         struct StemrankModel **out);

enum StemrankStatus stemrank_model_save(const struct StemrankModel *model, const char *path);

/*
 Probability of the last of `n` words (1 to 3) given the ones before it.
 */
enum StemrankStatus stemrank_model_prob(const struct StemrankModel *model,
                                        const char *const *words,
                                        size_t n,
                                        double *out);

/*
 Corpus count of an n-gram of `n` words (1 to 3).
 */
enum StemrankStatus stemrank_model_count(const struct StemrankModel *model,
                                         const char *const *words,
                                         size_t n,
                                         uint64_t *out);

void stemrank_model_free(struct StemrankModel *model);

/*
 Loads a stemmer. A NULL `rules_path` selects the bundled Hindi rules; a
 NULL `lexicon_path` means an empty lexicon.
 */
enum StemrankStatus stemrank_stemmer_load(const char *rules_path,
                                          const char *lexicon_path,
                                          struct StemrankStemmer **out);

/*
 Stems one word. The result must be released with
 [`stemrank_string_free`].
 */
enum StemrankStatus stemrank_stemmer_stem(const struct StemrankStemmer *stemmer,
                                          const char *word,
                                          char **out);

void stemrank_stemmer_free(struct StemrankStemmer *stemmer);

/*
 Builds a ranker from model, lexicon and rule files. NULL `rules_path`
 and `lexicon_path` behave as in [`stemrank_stemmer_load`].
 */
enum StemrankStatus stemrank_ranker_new(const char *source_lm_path,
                                        const char *stem_lm_path,
                                        const char *bilingual_lexicon_path,
                                        const char *rules_path,
                                        const char *lexicon_path,
                                        size_t min_stem_matches,
                                        struct StemrankRanker **out);

/*
 Scores and ranks `n` candidate translations of `source`. `scores` and
 `ranks` receive `n` values each, in candidate order; rank 1 is best and
 tied candidates share a rank.
 */
enum StemrankStatus stemrank_ranker_rank(const struct StemrankRanker *ranker,
                                         const char *source,
                                         const char *const *candidates,
                                         size_t n,
                                         double *scores,
                                         size_t *ranks);

void stemrank_ranker_free(struct StemrankRanker *ranker);

/*
 Spearman's rho between two win-count columns of length `n`, with
 average ranks for ties. Fails with `Validation` when either column is
 constant.
 */
enum StemrankStatus stemrank_spearman(const uint64_t *a, const uint64_t *b, size_t n, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STEMRANK_H */
