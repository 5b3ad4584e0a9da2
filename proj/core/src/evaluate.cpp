#include "micropolish/evaluate.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace micropolish {

namespace {

// kappa for every cluster on the left side against the right side, via an
// inverted index vertex -> right clusters. Avoids the all-pairs scan.
std::vector<std::uint32_t> best_overlaps(const Clustering& left, const Clustering& right) {
    std::unordered_map<VertexId, std::vector<std::uint32_t>> index;
    for (std::uint32_t j = 0; j < right.size(); ++j)
        for (auto v : right[j]) index[v].push_back(j);

    std::vector<std::uint32_t> result(left.size(), 0);
    std::unordered_map<std::uint32_t, std::uint32_t> overlap;
    for (std::uint32_t i = 0; i < left.size(); ++i) {
        overlap.clear();
        for (auto v : left[i]) {
            auto it = index.find(v);
            if (it == index.end()) continue;
            for (auto j : it->second) ++overlap[j];
        }
        for (auto [j, c] : overlap) result[i] = std::max(result[i], c);
    }
    return result;
}

double mean_ratio(const std::vector<std::uint32_t>& overlaps, const Clustering& clusters,
                  bool drop_singletons) {
    double sum = 0.0;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (drop_singletons && clusters[i].size() <= 1) continue;
        sum += static_cast<double>(overlaps[i]) / static_cast<double>(clusters[i].size());
        ++count;
    }
    return count ? sum / static_cast<double>(count) : 0.0;
}

void hist_json(std::ostringstream& out, const std::map<std::uint64_t, std::uint64_t>& h) {
    out << "{";
    bool first = true;
    for (auto [k, v] : h) {
        if (!first) out << ", ";
        out << "\"" << k << "\": " << v;
        first = false;
    }
    out << "}";
}

}  // namespace

AccuracyReport accuracy(const Clustering& truth, const Clustering& found,
                        bool drop_singletons) {
    AccuracyReport r;
    r.truth_best_overlap = best_overlaps(truth, found);
    r.found_best_overlap = best_overlaps(found, truth);
    r.precision_avg = mean_ratio(r.truth_best_overlap, truth, false);
    r.recall_avg = mean_ratio(r.found_best_overlap, found, drop_singletons);
    double pr = r.precision_avg + r.recall_avg;
    r.f_value = pr > 0.0 ? 2.0 * r.precision_avg * r.recall_avg / pr : 0.0;
    return r;
}

std::string AccuracyReport::to_json() const {
    std::ostringstream out;
    out << "{\"precision\": " << precision_avg << ", \"recall\": " << recall_avg
        << ", \"f_value\": " << f_value << ", \"truth_clusters\": " << truth_best_overlap.size()
        << ", \"found_clusters\": " << found_best_overlap.size() << "}";
    return out.str();
}

StatsReport cluster_stats(const Clustering& c, VertexId n) {
    StatsReport r;
    r.count = c.size();
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint32_t> memberships(n, 0);
    for (auto& k : c) {
        sizes.push_back(k.size());
        ++r.size_histogram[k.size()];
        r.max_size = std::max<std::uint64_t>(r.max_size, k.size());
        for (auto v : k)
            if (v < n) ++memberships[v];
    }
    if (!sizes.empty()) {
        std::sort(sizes.begin(), sizes.end());
        std::size_t mid = sizes.size() / 2;
        r.median_size = sizes.size() % 2 ? static_cast<double>(sizes[mid])
                                         : (static_cast<double>(sizes[mid - 1]) +
                                            static_cast<double>(sizes[mid])) / 2.0;
    }
    std::uint64_t covered = 0;
    for (auto m : memberships) {
        if (m > 0) ++covered;
        ++r.overlap_histogram[m];
    }
    r.coverage = n ? static_cast<double>(covered) / static_cast<double>(n) : 0.0;
    return r;
}

std::string StatsReport::to_json() const {
    std::ostringstream out;
    out << "{\"count\": " << count << ", \"max_size\": " << max_size
        << ", \"median_size\": " << median_size << ", \"coverage\": " << coverage
        << ", \"size_histogram\": ";
    hist_json(out, size_histogram);
    out << ", \"overlap_histogram\": ";
    hist_json(out, overlap_histogram);
    out << "}";
    return out.str();
}

}  // namespace micropolish
