#ifndef GENECLUSTER_VALIDITY_HPP
#define GENECLUSTER_VALIDITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "genecluster/clustering.hpp"
#include "genecluster/matrix.hpp"

namespace genecluster {

// Crisp validity indices. Both need k >= 2, every cluster non-empty and
// pairwise distinct centroids; otherwise validity_error (or its subclass
// degenerate_clustering_error for coincident centroids) is thrown.

/// Davies-Bouldin: mean over clusters of max_{g != h} (s_h + s_g) / d(Z_h, Z_g),
/// where s_h is the mean distance of cluster h's members to Z_h.
double db_index(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                const dense_matrix& centroids);

/// Xie-Beni with unit memberships: within-cluster squared error over
/// n * min_{h != g} |Z_h - Z_g|^2.
double xb_index(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                const dense_matrix& centroids);

double sum_squared_error(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                         const dense_matrix& centroids);

/// How a boundary gene picks among its upper-approximation clusters.
enum class proximity {
    distance,    // nearest centroid (Euclidean)
    similarity,  // most similar centroid (fuzzy soft similarity)
};

/// Crisp assignment from a rough clustering: lower members keep their
/// cluster, boundary genes go to the closest of their upper clusters,
/// ties to the lowest index. `points` is the matrix the clustering ran on.
std::vector<std::size_t> crispify(const rough_clustering& rough, const dense_matrix& points,
                                  proximity kind);

struct validity_report {
    std::string dataset;
    std::string algorithm;
    double db_index = 0.0;
    double xb_index = 0.0;
    double sse = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    rough_params params;
};

}  // namespace genecluster

#endif  // GENECLUSTER_VALIDITY_HPP
