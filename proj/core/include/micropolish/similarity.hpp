#ifndef MICROPOLISH_SIMILARITY_HPP
#define MICROPOLISH_SIMILARITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "micropolish/graph.hpp"

namespace micropolish {

/// Polishing rule over closed neighborhoods (or raw record sets).
struct SimilarityMeasure {
    enum class Kind { KCommon, Jaccard, Pmi };
    Kind kind;
    std::uint32_t k = 1;  // KCommon
    double theta = 0.0;   // Jaccard / Pmi

    static SimilarityMeasure k_common(std::uint32_t k);
    static SimilarityMeasure jaccard(double theta);
    static SimilarityMeasure pmi(double theta);
};

struct MeasureResult {
    double value;
    bool passes;
};

/// Evaluates a measure on an intersection count and set sizes.
/// For graph use, sizes are closed-neighborhood sizes and universe = |V|;
/// for record use, sizes are raw record sizes. Zero count never passes.
MeasureResult evaluate_measure(const SimilarityMeasure& m, std::uint64_t count,
                               std::uint64_t size_u, std::uint64_t size_v,
                               std::uint64_t universe);

struct PairCount {
    VertexId u, v;  // u < v
    std::uint32_t count;
    friend bool operator==(const PairCount&, const PairCount&) = default;
};

struct IntersectionStats {
    std::uint64_t inner_steps = 0;  // counter increments executed
};

/// All pairs u < v with |N[u] ∩ N[v]| >= min_count (closed neighborhoods),
/// exact counts, canonical u-major order. The per-vertex counter array is
/// reset through the touched list so the cost stays within the sparse
/// bound sum_w C(|N[w]|, 2). Deterministic for any thread count.
std::vector<PairCount> neighbor_intersections(const Graph& g, std::uint32_t min_count = 1,
                                              unsigned threads = 1,
                                              IntersectionStats* stats = nullptr);

/// List of records, each a sorted set of item ids.
struct TransactionDatabase {
    std::vector<std::vector<std::uint32_t>> records;
    std::uint32_t item_universe_size = 0;
};

/// Same counting pass over a set family: pairs of record indices with
/// |T_u ∩ T_v| >= min_count.
std::vector<PairCount> record_intersections(const TransactionDatabase& db,
                                            std::uint32_t min_count = 1,
                                            unsigned threads = 1);

/// Similarity graph of a database: vertex per record, edge when the
/// measure passes on the record intersection (raw record sizes).
Graph build_similarity_graph_from_db(const TransactionDatabase& db, const SimilarityMeasure& m,
                                     unsigned threads = 1);

/// Checks the frequent-itemset equivalence: in the database {N[u] | u in V},
/// the frequency of every 2-itemset {u,v} equals |N[u] ∩ N[v]|.
bool pair_frequency_equivalence_check(const Graph& g);

/// Transaction text format: one record per line, whitespace-separated item
/// tokens interned in first-appearance order, '#' comments.
TransactionDatabase load_transactions(const std::string& text,
                                      std::vector<std::string>* item_names = nullptr);

/// Drops items with document frequency < min_df or >= max_df_ratio * #records
/// (non-strict upper bound by default). Item ids are preserved.
TransactionDatabase filter_by_document_frequency(const TransactionDatabase& db,
                                                 std::uint32_t min_df, double max_df_ratio,
                                                 bool max_df_strict = false);

/// "u v count" lines, u-major order.
std::string format_pair_counts(const std::vector<PairCount>& pairs);

}  // namespace micropolish

#endif
