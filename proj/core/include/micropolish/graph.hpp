#ifndef MICROPOLISH_GRAPH_HPP
#define MICROPOLISH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace micropolish {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Immutable sparse undirected graph in CSR form.
///
/// Adjacency lists are strictly ascending, symmetric, without self-loops
/// or duplicates. Vertices are dense 0-based ids. Safe to share across
/// concurrent readers; all operations on it are pure.
class Graph {
public:
    Graph() = default;

    /// Builds the graph from an unordered edge list. Duplicate and reversed
    /// pairs are merged; self-loops are rejected.
    static Graph from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges);
    static Graph from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
        return from_edges(n, std::span<const std::pair<VertexId, VertexId>>(edges));
    }

    /// Builds directly from per-vertex adjacency (must already satisfy the
    /// invariants; checked in debug builds only).
    static Graph from_adjacency(std::vector<std::vector<VertexId>> adj);

    VertexId num_vertices() const { return n_; }
    std::uint64_t num_edges() const { return m_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(VertexId u, VertexId v) const;

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_{0};  // n+1 entries
    std::vector<VertexId> adj_;
};

inline bool graph_equal(const Graph& a, const Graph& b) { return a == b; }

/// N[v] = N(v) ∪ {v}, sorted.
VertexSet closed_neighborhood(const Graph& g, VertexId v);

/// Edge density of the subgraph induced by u: |E[u]| / C(|u|,2). Requires |u| >= 2.
double density(const Graph& g, const VertexSet& u);

/// Parses the whitespace edge-list format: one "u v" pair per line,
/// '#' comments, optional "n <N>" header; both orientations merged.
Graph load_edge_list(const std::string& text);

/// Inverse of load_edge_list; adjacency emitted in ascending order,
/// byte-for-byte deterministic. Always writes the "n <N>" header so
/// trailing isolated vertices survive a round trip.
std::string save_edge_list(const Graph& g);

Graph load_edge_list_file(const std::string& path);
void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace micropolish

#endif
