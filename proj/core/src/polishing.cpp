#include "micropolish/polishing.hpp"

#include <algorithm>
#include <sstream>

namespace micropolish {

Graph polish_step(const Graph& g, const SimilarityMeasure& m, unsigned threads) {
    std::uint32_t min_count = m.kind == SimilarityMeasure::Kind::KCommon ? m.k : 1;
    auto pairs = neighbor_intersections(g, min_count, threads);
    VertexId n = g.num_vertices();
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(pairs.size());
    for (auto& pc : pairs) {
        std::uint64_t su = g.degree(pc.u) + 1, sv = g.degree(pc.v) + 1;
        if (evaluate_measure(m, pc.count, su, sv, n).passes) edges.emplace_back(pc.u, pc.v);
    }
    return Graph::from_edges(n, edges);
}

namespace {

std::uint64_t adjacency_hash(const Graph& g) {
    // FNV-1a over the adjacency stream
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (VertexId w : g.neighbors(v)) mix((std::uint64_t(v) << 32) | w);
    return h;
}

}  // namespace

std::pair<Graph, PolishReport> polish(const Graph& g, const SimilarityMeasure& m,
                                      std::uint32_t tau, unsigned threads) {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");
    PolishReport report;
    report.tau = tau;
    report.edge_counts.push_back(g.num_edges());

    std::vector<Graph> history;
    std::vector<std::uint64_t> hashes;
    history.push_back(g);
    hashes.push_back(adjacency_hash(g));

    Graph current = g;
    for (std::uint32_t i = 1; i <= tau; ++i) {
        Graph next = polish_step(current, m, threads);
        report.iterations_run = i;
        report.edge_counts.push_back(next.num_edges());
        std::uint64_t h = adjacency_hash(next);
        if (h == hashes.back() && next == history.back()) {
            report.status = PolishStatus::Converged;
            return {std::move(next), std::move(report)};
        }
        for (std::size_t j = 0; j + 1 < history.size(); ++j) {
            if (hashes[j] == h && history[j] == next) {
                report.status = PolishStatus::CycleDetected;
                report.period = static_cast<std::uint32_t>(history.size() - j);
                return {std::move(next), std::move(report)};
            }
        }
        history.push_back(next);
        hashes.push_back(h);
        current = std::move(next);
    }
    report.status = PolishStatus::CapReached;
    return {std::move(current), std::move(report)};
}

bool is_polished(const Graph& g, const SimilarityMeasure& m, unsigned threads) {
    return g == polish_step(g, m, threads);
}

bool verify_property1_instance(const Graph& g, const VertexSet& k_set, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k_set.size() < k) throw std::invalid_argument("k_set must have at least k vertices");
    double gamma = static_cast<double>(k_set.size()) / static_cast<double>(k);
    double required = (gamma + 1.0) * static_cast<double>(k) / 2.0;
    for (auto v : k_set) {
        std::uint32_t internal = 0;
        auto nb = g.neighbors(v);
        for (auto u : k_set)
            if (u != v && std::binary_search(nb.begin(), nb.end(), u)) ++internal;
        if (static_cast<double>(internal) < required)
            throw std::invalid_argument("min internal degree below (gamma+1)k/2");
    }
    Graph polished = polish_step(g, SimilarityMeasure::k_common(k));
    for (std::size_t i = 0; i < k_set.size(); ++i)
        for (std::size_t j = i + 1; j < k_set.size(); ++j)
            if (!polished.has_edge(k_set[i], k_set[j])) return false;
    return true;
}

std::string PolishReport::to_json() const {
    std::ostringstream out;
    out << "{\"iterations\": " << iterations_run << ", \"edge_counts\": [";
    for (std::size_t i = 0; i < edge_counts.size(); ++i)
        out << (i ? ", " : "") << edge_counts[i];
    out << "], \"status\": \"";
    switch (status) {
        case PolishStatus::Converged: out << "Converged"; break;
        case PolishStatus::CapReached: out << "CapReached"; break;
        case PolishStatus::CycleDetected: out << "CycleDetected"; break;
    }
    out << "\"";
    if (period) out << ", \"period\": " << *period;
    out << ", \"tau\": " << tau << "}";
    return out.str();
}

}  // namespace micropolish
