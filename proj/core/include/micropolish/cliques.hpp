#ifndef MICROPOLISH_CLIQUES_HPP
#define MICROPOLISH_CLIQUES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "micropolish/graph.hpp"

namespace micropolish {

/// Ordered list of clusters: each sorted, whole list in lexicographic order.
using Clustering = std::vector<VertexSet>;

struct CliqueCapExceeded : std::runtime_error {
    std::uint64_t cap;
    explicit CliqueCapExceeded(std::uint64_t cap_)
        : std::runtime_error("maximal clique count exceeds cap"), cap(cap_) {}
};

constexpr std::uint64_t kNoCliqueCap = 0;

/// All maximal cliques of size >= min_size, canonical lexicographic order.
/// Pivot-based branch and bound with iterative degree peeling of vertices
/// that cannot reach min_size. Throws CliqueCapExceeded when max_cliques > 0
/// and the output would exceed it.
Clustering enumerate_maximal_cliques(const Graph& g, std::uint32_t min_size = 1,
                                     std::uint64_t max_cliques = kNoCliqueCap);

/// Exhaustive-subset test oracle; requires n <= 25.
Clustering brute_force_maximal_cliques(const Graph& g);

/// A largest clique, ties broken lexicographically.
VertexSet max_clique(const Graph& g);

void canonicalize(Clustering& c);

/// One cluster per line, ascending space-separated vertex ids.
std::string save_clusters(const Clustering& c);
Clustering load_clusters(const std::string& text);
void save_clusters_file(const Clustering& c, const std::string& path);
Clustering load_clusters_file(const std::string& path);

}  // namespace micropolish

#endif
