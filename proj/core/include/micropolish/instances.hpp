#ifndef MICROPOLISH_INSTANCES_HPP
#define MICROPOLISH_INSTANCES_HPP

#include <cstdint>
#include <string>

#include "micropolish/cliques.hpp"
#include "micropolish/graph.hpp"

namespace micropolish {

struct PlantedParams {
    VertexId n;
    std::uint32_t h;            // number of planted cliques
    std::uint32_t clique_size;
    std::uint32_t b;            // membership multiplicity bound
    double p;                   // per-edge survival probability under rewiring
    std::uint64_t seed;
};

/// Planted-clique benchmark: graph plus the pre-noise ground truth.
struct PlantedInstance {
    Graph graph;
    Clustering truth;
    PlantedParams params;

    std::string manifest_json() const;
};

/// Union of h random cliques (each vertex in at most b of them), then
/// degree-preserving rewiring: each edge, processed once from its lower
/// endpoint, keeps its far endpoint with probability p and is otherwise
/// reattached to a degree-proportional random vertex (a stub of the clean
/// graph), rejecting self-loops and duplicates.
PlantedInstance gen_planted(const PlantedParams& params);

/// The period-2 oscillator for k-common polishing (k >= 5): hub a, vertex
/// classes B and C with biclique wiring, plus size-(k+2) anchor cliques on
/// every B-C pair and two bridge vertices per class member.
Graph gen_theorem3_graph(std::uint32_t k);

/// The n-common polished gadget with exactly 2^(n/2) maximal cliques:
/// K_n minus a perfect matching, each of the n/2+1 covering cliques
/// extended by n/2 fresh vertices. n even, n >= 4.
Graph gen_theorem5_graph(std::uint32_t n);

/// The Jaccard-polishing oscillator family G_{m1,m2,n}: hub a, classes B
/// and C of size n, biclique a x B and B x C, and a clique D_ij ∪ {b_i,c_j}
/// per pair with |D_ii| = m1, |D_ij| = m2 otherwise.
Graph gen_theorem6_graph(std::uint32_t m1, std::uint32_t m2, std::uint32_t n);

/// Window (f, g] of thresholds for which G_{m1,m2,n} oscillates with
/// period 2, computed from the closed-form pairwise Jaccard values.
std::pair<double, double> theorem6_threshold_window(std::uint32_t m1, std::uint32_t m2,
                                                    std::uint32_t n);

struct ZipfParams {
    VertexId n;
    double alpha;
    double delta;
    double beta;
    std::uint64_t seed;
};

/// Random graph whose target degree for vertex i is max(alpha/(i+1)^delta,
/// beta), realized by stub pairing with self-loop/duplicate rejection.
Graph gen_zipf_graph(const ZipfParams& params);

}  // namespace micropolish

#endif
