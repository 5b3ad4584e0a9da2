#include "micropolish/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace micropolish {

Graph Graph::from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
    std::vector<std::pair<VertexId, VertexId>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop in edge list");
        if (u >= n || v >= n) throw std::invalid_argument("vertex id out of range");
        if (u > v) std::swap(u, v);
        canon.emplace_back(u, v);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    Graph g;
    g.n_ = n;
    g.m_ = canon.size();
    std::vector<VertexId> deg(n, 0);
    for (auto [u, v] : canon) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * g.m_);
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // canon is sorted, so each adjacency list is filled in ascending order
    for (auto [u, v] : canon) g.adj_[fill[u]++] = v;
    for (auto [u, v] : canon) g.adj_[fill[v]++] = u;
    for (VertexId v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<VertexId>> adj) {
    Graph g;
    g.n_ = static_cast<VertexId>(adj.size());
    g.offsets_.assign(g.n_ + 1, 0);
    for (VertexId v = 0; v < g.n_; ++v) {
        assert(std::is_sorted(adj[v].begin(), adj[v].end()));
        g.offsets_[v + 1] = g.offsets_[v] + adj[v].size();
    }
    g.adj_.reserve(g.offsets_[g.n_]);
    for (auto& nb : adj) g.adj_.insert(g.adj_.end(), nb.begin(), nb.end());
    g.m_ = g.adj_.size() / 2;
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet closed_neighborhood(const Graph& g, VertexId v) {
    if (v >= g.num_vertices()) throw std::invalid_argument("vertex id out of range");
    auto nb = g.neighbors(v);
    VertexSet out;
    out.reserve(nb.size() + 1);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    out.assign(nb.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, nb.end());
    return out;
}

double density(const Graph& g, const VertexSet& u) {
    if (u.size() < 2) throw std::invalid_argument("density requires at least 2 vertices");
    std::uint64_t edges = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto nb = g.neighbors(u[i]);
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (std::binary_search(nb.begin(), nb.end(), u[j])) ++edges;
    }
    double pairs = static_cast<double>(u.size()) * (static_cast<double>(u.size()) - 1.0) / 2.0;
    return static_cast<double>(edges) / pairs;
}

Graph load_edge_list(const std::string& text) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId max_id = 0;
    bool any_vertex = false;
    long long declared_n = -1;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            long long n = -1;
            std::string rest;
            if (!(ls >> n) || n < 0 || (ls >> rest))
                throw ParseError(lineno, "malformed vertex count header");
            declared_n = n;
            continue;
        }
        long long u = -1, v = -1;
        std::string rest;
        try {
            std::size_t used = 0;
            u = std::stoll(first, &used);
            if (used != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected unsigned integer, got '" + first + "'");
        }
        if (!(ls >> v) || (ls >> rest))
            throw ParseError(lineno, "expected exactly two vertex ids");
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (u == v) throw ParseError(lineno, "self-loop");
        auto uu = static_cast<VertexId>(u), vv = static_cast<VertexId>(v);
        edges.emplace_back(uu, vv);
        max_id = std::max({max_id, uu, vv});
        any_vertex = true;
    }

    VertexId n = any_vertex ? max_id + 1 : 0;
    if (declared_n >= 0) {
        if (static_cast<long long>(n) > declared_n)
            throw ParseError(0, "vertex id exceeds declared vertex count");
        n = static_cast<VertexId>(declared_n);
    }
    return Graph::from_edges(n, edges);
}

std::string save_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.num_vertices() << "\n";
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_edge_list(ss.str());
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << save_edge_list(g);
}

}  // namespace micropolish
