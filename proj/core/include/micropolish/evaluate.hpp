#ifndef MICROPOLISH_EVALUATE_HPP
#define MICROPOLISH_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "micropolish/cliques.hpp"

namespace micropolish {

/// Best-overlap precision/recall accuracy of a found clustering against
/// planted truth. P averages kappa(C)/|C| over truth clusters, R the
/// symmetric quantity over found clusters; f_value is the harmonic mean.
struct AccuracyReport {
    double precision_avg = 0.0;
    double recall_avg = 0.0;
    double f_value = 0.0;
    std::vector<std::uint32_t> truth_best_overlap;  // kappa(C) per truth cluster
    std::vector<std::uint32_t> found_best_overlap;  // kappa(C') per found cluster

    std::string to_json() const;
};

/// drop_singletons excludes size-1 found clusters from R's average.
AccuracyReport accuracy(const Clustering& truth, const Clustering& found,
                        bool drop_singletons = false);

struct StatsReport {
    std::uint64_t count = 0;
    std::map<std::uint64_t, std::uint64_t> size_histogram;
    std::uint64_t max_size = 0;
    double median_size = 0.0;
    double coverage = 0.0;  // fraction of vertices in at least one cluster
    std::map<std::uint64_t, std::uint64_t> overlap_histogram;  // memberships -> vertices

    std::string to_json() const;
};

StatsReport cluster_stats(const Clustering& c, VertexId n);

}  // namespace micropolish

#endif
