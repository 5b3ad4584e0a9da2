#ifndef MICROPOLISH_POLISHING_HPP
#define MICROPOLISH_POLISHING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "micropolish/graph.hpp"
#include "micropolish/similarity.hpp"

namespace micropolish {

enum class PolishStatus { Converged, CapReached, CycleDetected };

/// Per-iteration trace of a polishing run.
struct PolishReport {
    std::uint32_t iterations_run = 0;
    std::vector<std::uint64_t> edge_counts;  // includes the input graph
    PolishStatus status = PolishStatus::CapReached;
    std::optional<std::uint32_t> period;  // set for CycleDetected
    std::uint32_t tau = 0;

    std::string to_json() const;
};

/// One polishing pass: edges become exactly the pairs whose closed
/// neighborhoods in g pass the measure.
Graph polish_step(const Graph& g, const SimilarityMeasure& m, unsigned threads = 1);

/// Iterates polish_step up to tau times; stops early when the graph stops
/// changing (Converged) or revisits an earlier graph (CycleDetected, with
/// the cycle period). Returns the last computed graph either way.
std::pair<Graph, PolishReport> polish(const Graph& g, const SimilarityMeasure& m,
                                      std::uint32_t tau, unsigned threads = 1);

/// G == P(G)?
bool is_polished(const Graph& g, const SimilarityMeasure& m, unsigned threads = 1);

/// Checks the min-degree sufficient condition instance: k_set has gamma*k
/// vertices with min internal degree >= (gamma+1)k/2, and must therefore be
/// a clique after one k-common polishing step. Throws if the precondition
/// does not hold.
bool verify_property1_instance(const Graph& g, const VertexSet& k_set, std::uint32_t k);

}  // namespace micropolish

#endif
