#include "micropolish/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace micropolish {

namespace {

void add_clique_edges(std::vector<std::pair<VertexId, VertexId>>& edges,
                      const std::vector<VertexId>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            edges.emplace_back(members[i], members[j]);
}

}  // namespace

PlantedInstance gen_planted(const PlantedParams& params) {
    auto [n, h, cs, b, p, seed] = params;
    if (cs < 2 || cs > n) throw std::invalid_argument("clique_size must be in [2, n]");
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    if (static_cast<std::uint64_t>(h) * cs > static_cast<std::uint64_t>(n) * b)
        throw std::invalid_argument("h*clique_size exceeds n*b: multiplicity constraint infeasible");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<std::uint32_t> membership(n, 0);
    Clustering truth;
    truth.reserve(h);
    for (std::uint32_t c = 0; c < h; ++c) {
        std::set<VertexId> members;
        std::uint64_t attempts = 0;
        const std::uint64_t retry_limit = 20ull * n + 1000;
        while (members.size() < cs) {
            if (attempts++ > retry_limit) {
                // dense endgame: sample directly from the eligible vertices
                std::vector<VertexId> eligible;
                for (VertexId v = 0; v < n; ++v)
                    if (membership[v] < b && !members.count(v)) eligible.push_back(v);
                if (eligible.size() < cs - members.size())
                    throw std::invalid_argument("multiplicity constraint infeasible");
                while (members.size() < cs) {
                    std::uniform_int_distribution<std::size_t> d(0, eligible.size() - 1);
                    std::size_t i = d(rng);
                    members.insert(eligible[i]);
                    eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(i));
                }
                break;
            }
            VertexId v = pick(rng);
            if (membership[v] >= b || members.count(v)) continue;
            members.insert(v);
        }
        for (auto v : members) ++membership[v];
        truth.emplace_back(members.begin(), members.end());
    }
    canonicalize(truth);

    std::vector<std::set<VertexId>> adj(n);
    for (auto& clique : truth)
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                adj[clique[i]].insert(clique[j]);
                adj[clique[j]].insert(clique[i]);
            }

    // degree-preserving rewiring: each edge gets one 1-p chance, taken from
    // its lower endpoint's side. Replacement endpoints are drawn from the
    // clean graph's stub list (degree-proportional), so vertices outside
    // every clique stay outside the similarity structure instead of
    // accumulating spurious low-degree pockets.
    std::vector<VertexId> stubs;
    for (VertexId v = 0; v < n; ++v)
        stubs.insert(stubs.end(), adj[v].size(), v);
    std::uniform_int_distribution<std::size_t> pick_stub(0, stubs.empty() ? 0 : stubs.size() - 1);
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> snapshot;
        for (VertexId u : adj[v])
            if (u > v) snapshot.push_back(u);
        for (VertexId u : snapshot) {
            if (!adj[v].count(u)) continue;  // rewired away within this pass
            if (coin(rng) < p) continue;
            VertexId replacement = u;
            bool found = false;
            for (int tries = 0; tries < 50; ++tries) {
                VertexId cand = stubs[pick_stub(rng)];
                if (cand == v || adj[v].count(cand)) continue;
                replacement = cand;
                found = true;
                break;
            }
            if (!found) continue;
            adj[v].erase(u);
            adj[u].erase(v);
            adj[v].insert(replacement);
            adj[replacement].insert(v);
        }
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : adj[v])
            if (v < u) edges.emplace_back(v, u);

    return {Graph::from_edges(n, edges), std::move(truth), params};
}

std::string PlantedInstance::manifest_json() const {
    std::ostringstream out;
    out << "{\"n\": " << params.n << ", \"h\": " << params.h
        << ", \"clique_size\": " << params.clique_size << ", \"b\": " << params.b
        << ", \"p\": " << params.p << ", \"seed\": " << params.seed << "}";
    return out.str();
}

Graph gen_theorem3_graph(std::uint32_t k) {
    if (k < 5) throw std::invalid_argument("theorem3 graph requires k >= 5");
    const VertexId a = 0;
    std::vector<VertexId> B, C;
    VertexId next = 1;
    for (std::uint32_t i = 0; i < k - 2; ++i) B.push_back(next++);
    for (std::uint32_t i = 0; i < k - 2; ++i) C.push_back(next++);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto b : B) edges.emplace_back(a, b);
    for (auto b : B)
        for (auto c : C) edges.emplace_back(b, c);

    auto attach_clique = [&](std::vector<VertexId> anchors) {
        while (anchors.size() < k + 2) anchors.push_back(next++);
        add_clique_edges(edges, anchors);
    };

    for (auto b : B)
        for (auto c : C) attach_clique({b, c});
    for (auto v : B) {
        for (int i = 0; i < 2; ++i) {
            VertexId w = next++;
            attach_clique({a, w});
            attach_clique({w, v});
        }
    }
    for (auto v : C) {
        for (int i = 0; i < 2; ++i) {
            VertexId w = next++;
            attach_clique({a, w});
            attach_clique({w, v});
        }
    }
    return Graph::from_edges(next, edges);
}

Graph gen_theorem5_graph(std::uint32_t n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("theorem5 graph requires even n >= 4");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) edges.emplace_back(u, v);  // skip matching (2i,2i+1)

    // covering cliques: the full second class, and the first class with one swap
    std::vector<std::vector<VertexId>> cover;
    std::vector<VertexId> evens, odds;
    for (VertexId v = 0; v < n; v += 2) evens.push_back(v);
    for (VertexId v = 1; v < n; v += 2) odds.push_back(v);
    cover.push_back(odds);
    for (std::uint32_t i = 0; i < n / 2; ++i) {
        auto u = evens;
        u[i] = static_cast<VertexId>(2 * i + 1);
        std::sort(u.begin(), u.end());
        cover.push_back(std::move(u));
    }

    VertexId next = n;
    for (auto& u : cover) {
        for (std::uint32_t j = 0; j < n / 2; ++j) u.push_back(next++);
        add_clique_edges(edges, u);
    }
    return Graph::from_edges(next, edges);
}

Graph gen_theorem6_graph(std::uint32_t m1, std::uint32_t m2, std::uint32_t n) {
    if (m1 < 1 || m2 < 1 || n < 1) throw std::invalid_argument("m1, m2, n must be >= 1");
    const VertexId a = 0;
    auto b_of = [&](std::uint32_t i) { return static_cast<VertexId>(1 + i); };
    auto c_of = [&](std::uint32_t j) { return static_cast<VertexId>(1 + n + j); };
    VertexId next = static_cast<VertexId>(1 + 2 * n);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(a, b_of(i));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) edges.emplace_back(b_of(i), c_of(j));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            std::vector<VertexId> clique{b_of(i), c_of(j)};
            std::uint32_t m = (i == j) ? m1 : m2;
            for (std::uint32_t t = 0; t < m; ++t) clique.push_back(next++);
            add_clique_edges(edges, clique);
        }
    return Graph::from_edges(next, edges);
}

std::pair<double, double> theorem6_threshold_window(std::uint32_t m1, std::uint32_t m2,
                                                    std::uint32_t n) {
    double M1 = m1, M2 = m2, N = n;
    double tail = M1 + (N - 1) * M2;  // |D_i,*| for one b_i

    double jsim_ab = 2.0 / (2 * N + tail + 1);
    double jsim_bb = (N + 1) / (2 * tail + N + 3);
    double jsim_cc = N / (2 * tail + N + 2);
    double jsim_dd_far = 1.0 / (std::min(M1, M2) + M2 + 3);
    double f = std::max({jsim_ab, n >= 2 ? jsim_bb : 0.0, n >= 2 ? jsim_cc : 0.0, jsim_dd_far});

    double g = N / (tail + N + 2);  // jsim(a, c_j)
    std::vector<double> block_sizes{M1};
    if (n >= 2) block_sizes.push_back(M2);
    for (double m : block_sizes) {
        g = std::min(g, (m + 2) / (2 * tail - m + 2 * N + 1));  // jsim(b_i, c_j)
        g = std::min(g, (m + 2) / (tail + N + 2));              // jsim(b_i, d)
        g = std::min(g, (m + 2) / (tail + N + 1));              // jsim(c_j, d)
    }
    return {f, g};
}

Graph gen_zipf_graph(const ZipfParams& params) {
    auto [n, alpha, delta, beta, seed] = params;
    if (!(alpha > 0.0) || !(delta >= 0.0)) throw std::invalid_argument("alpha > 0, delta >= 0 required");
    std::mt19937_64 rng(seed);

    std::vector<VertexId> stubs;
    for (VertexId i = 0; i < n; ++i) {
        double target = std::max(alpha / std::pow(static_cast<double>(i) + 1.0, delta), beta);
        auto d = static_cast<std::uint64_t>(std::llround(std::min(target, static_cast<double>(n - 1))));
        for (std::uint64_t t = 0; t < d; ++t) stubs.push_back(i);
    }

    // pair stubs; rejected stubs (self-loop or duplicate) go back into the
    // pool for another shuffle round so head vertices are not starved
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> present;
    for (int round = 0; round < 50 && stubs.size() >= 2; ++round) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<VertexId> rejected;
        if (stubs.size() % 2) {
            rejected.push_back(stubs.back());
            stubs.pop_back();
        }
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            VertexId u = stubs[i], v = stubs[i + 1];
            if (u > v) std::swap(u, v);
            if (u == v || !present.emplace(u, v).second) {
                rejected.push_back(stubs[i]);
                rejected.push_back(stubs[i + 1]);
                continue;
            }
            edges.emplace_back(u, v);
        }
        stubs = std::move(rejected);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace micropolish
