#include "micropolish/cliques.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace micropolish {

namespace {

// Working state for the pivot branch and bound. Candidate/excluded sets
// are sorted vectors; intersections by merge against adjacency.
struct Enumerator {
    const Graph& g;
    std::uint32_t min_size;
    std::uint64_t cap;
    Clustering out;
    VertexSet current;

    Enumerator(const Graph& g_, std::uint32_t min_size_, std::uint64_t cap_)
        : g(g_), min_size(min_size_), cap(cap_) {}

    VertexSet intersect_neighbors(const VertexSet& set, VertexId v) const {
        VertexSet r;
        auto nb = g.neighbors(v);
        std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(),
                              std::back_inserter(r));
        return r;
    }

    std::uint64_t overlap(const VertexSet& set, VertexId v) const {
        auto nb = g.neighbors(v);
        std::uint64_t c = 0;
        auto it = set.begin();
        for (auto w : nb) {
            it = std::lower_bound(it, set.end(), w);
            if (it == set.end()) break;
            if (*it == w) ++c;
        }
        return c;
    }

    void expand(VertexSet cand, VertexSet excl) {
        if (current.size() + cand.size() < min_size) return;
        if (cand.empty()) {
            if (excl.empty() && current.size() >= min_size) {
                if (cap != kNoCliqueCap && out.size() >= cap) throw CliqueCapExceeded(cap);
                VertexSet clique = current;
                std::sort(clique.begin(), clique.end());
                out.push_back(std::move(clique));
            }
            return;
        }
        // greedy pivot: most candidate neighbors, smallest id on ties
        VertexId pivot = cand.front();
        std::uint64_t best = 0;
        bool have = false;
        for (auto v : cand) {
            auto c = overlap(cand, v);
            if (!have || c > best) { pivot = v; best = c; have = true; }
        }
        for (auto v : excl) {
            auto c = overlap(cand, v);
            if (c > best) { pivot = v; best = c; }
        }

        VertexSet ext;
        {
            auto nb = g.neighbors(pivot);
            std::set_difference(cand.begin(), cand.end(), nb.begin(), nb.end(),
                                std::back_inserter(ext));
        }
        for (auto v : ext) {
            current.push_back(v);
            expand(intersect_neighbors(cand, v), intersect_neighbors(excl, v));
            current.pop_back();
            cand.erase(std::lower_bound(cand.begin(), cand.end(), v));
            excl.insert(std::lower_bound(excl.begin(), excl.end(), v), v);
        }
    }
};

// Iteratively removes vertices whose degree cannot support a clique of
// min_size. Survivors keep their original ids.
std::vector<bool> peel(const Graph& g, std::uint32_t min_size) {
    VertexId n = g.num_vertices();
    std::vector<bool> alive(n, true);
    if (min_size < 2) return alive;
    std::vector<std::uint32_t> deg(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] + 1 < min_size) queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        if (!alive[v]) continue;
        alive[v] = false;
        for (auto u : g.neighbors(v)) {
            if (alive[u] && deg[u]-- + 1 == min_size) queue.push_back(u);
        }
    }
    return alive;
}

}  // namespace

Clustering enumerate_maximal_cliques(const Graph& g, std::uint32_t min_size,
                                     std::uint64_t max_cliques) {
    if (min_size < 1) throw std::invalid_argument("min_size must be >= 1");
    auto alive = peel(g, min_size);
    Enumerator e(g, min_size, max_cliques);
    VertexSet cand;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (alive[v]) cand.push_back(v);
    e.expand(std::move(cand), {});
    canonicalize(e.out);
    return e.out;
}

Clustering brute_force_maximal_cliques(const Graph& g) {
    VertexId n = g.num_vertices();
    if (n > 25) throw std::invalid_argument("brute force oracle limited to n <= 25");
    std::vector<std::uint32_t> open(n, 0), closed(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (auto u : g.neighbors(v)) open[v] |= 1u << u;
        closed[v] = open[v] | (1u << v);
    }
    Clustering out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        bool clique = true;
        for (VertexId v = 0; v < n && clique; ++v)
            if ((s >> v) & 1u) clique = (s & ~closed[v]) == 0;
        if (!clique) continue;
        bool maximal = true;
        for (VertexId u = 0; u < n && maximal; ++u)
            if (!((s >> u) & 1u)) maximal = (s & ~open[u]) != 0;
        if (!maximal) continue;
        VertexSet clq;
        for (VertexId v = 0; v < n; ++v)
            if ((s >> v) & 1u) clq.push_back(v);
        out.push_back(std::move(clq));
    }
    canonicalize(out);
    return out;
}

VertexSet max_clique(const Graph& g) {
    auto all = enumerate_maximal_cliques(g, 1);
    VertexSet best;
    for (auto& c : all)
        if (c.size() > best.size()) best = c;  // canonical scan, first largest wins ties
    return best;
}

void canonicalize(Clustering& c) {
    for (auto& k : c) std::sort(k.begin(), k.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

std::string save_clusters(const Clustering& c) {
    std::ostringstream out;
    for (auto& k : c) {
        for (std::size_t i = 0; i < k.size(); ++i) out << (i ? " " : "") << k[i];
        out << "\n";
    }
    return out.str();
}

Clustering load_clusters(const std::string& text) {
    Clustering c;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        VertexSet k;
        long long v;
        while (ls >> v) {
            if (v < 0) throw ParseError(lineno, "negative vertex id");
            k.push_back(static_cast<VertexId>(v));
        }
        if (!ls.eof()) throw ParseError(lineno, "expected vertex id");
        if (!k.empty()) c.push_back(std::move(k));
    }
    return c;
}

void save_clusters_file(const Clustering& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << save_clusters(c);
}

Clustering load_clusters_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_clusters(ss.str());
}

}  // namespace micropolish
