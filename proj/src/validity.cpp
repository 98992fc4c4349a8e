#include "genecluster/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "genecluster/errors.hpp"
#include "genecluster/fuzzysoft.hpp"

namespace genecluster {

namespace {

// Cluster sizes after checking the preconditions shared by both indices.
std::vector<std::size_t> checked_sizes(const dense_matrix& data,
                                       const std::vector<std::size_t>& assignment,
                                       const dense_matrix& centroids) {
    const std::size_t k = centroids.rows();
    if (k < 2) throw validity_error("validity indices need at least 2 clusters");
    if (assignment.size() != data.rows()) throw shape_error("assignment length differs from gene count");
    if (centroids.cols() != data.cols()) throw shape_error("centroid width differs from data width");
    std::vector<std::size_t> sizes(k, 0);
    for (auto h : assignment) {
        if (h >= k) throw shape_error("assignment names cluster " + std::to_string(h));
        ++sizes[h];
    }
    for (std::size_t h = 0; h < k; ++h) {
        if (sizes[h] == 0) throw validity_error("cluster " + std::to_string(h) + " is empty");
    }
    for (std::size_t h = 0; h < k; ++h) {
        for (std::size_t g = h + 1; g < k; ++g) {
            if (squared_distance(centroids.row(h), centroids.row(g)) == 0.0) {
                throw degenerate_clustering_error("centroids " + std::to_string(h) + " and " +
                                                  std::to_string(g) + " coincide");
            }
        }
    }
    return sizes;
}

}  // namespace

double sum_squared_error(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                         const dense_matrix& centroids) {
    if (assignment.size() != data.rows()) throw shape_error("assignment length differs from gene count");
    double sse = 0.0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        sse += squared_distance(data.row(i), centroids.row(assignment[i]));
    }
    return sse;
}

double db_index(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                const dense_matrix& centroids) {
    const auto sizes = checked_sizes(data, assignment, centroids);
    const std::size_t k = centroids.rows();

    std::vector<double> scatter(k, 0.0);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        scatter[assignment[i]] += euclidean_distance(data.row(i), centroids.row(assignment[i]));
    }
    for (std::size_t h = 0; h < k; ++h) scatter[h] /= static_cast<double>(sizes[h]);

    double total = 0.0;
    for (std::size_t h = 0; h < k; ++h) {
        double worst = 0.0;
        for (std::size_t g = 0; g < k; ++g) {
            if (g == h) continue;
            const double ratio =
                (scatter[h] + scatter[g]) / euclidean_distance(centroids.row(h), centroids.row(g));
            worst = std::max(worst, ratio);
        }
        total += worst;
    }
    return total / static_cast<double>(k);
}

double xb_index(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                const dense_matrix& centroids) {
    checked_sizes(data, assignment, centroids);
    const std::size_t k = centroids.rows();
    double separation = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < k; ++h) {
        for (std::size_t g = h + 1; g < k; ++g) {
            separation = std::min(separation, squared_distance(centroids.row(h), centroids.row(g)));
        }
    }
    return sum_squared_error(data, assignment, centroids) /
           (static_cast<double>(data.rows()) * separation);
}

std::vector<std::size_t> crispify(const rough_clustering& rough, const dense_matrix& points,
                                  proximity kind) {
    const std::size_t n = points.rows();
    const std::size_t k = rough.k();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> out(n, unset);
    for (std::size_t h = 0; h < k; ++h) {
        for (auto i : rough.lower[h]) out[i] = h;
    }
    // Walking clusters in index order with a strict comparison keeps ties on
    // the lowest index.
    std::vector<double> best_score(n);
    for (std::size_t h = 0; h < k; ++h) {
        for (auto i : rough.upper[h]) {
            if (out[i] != unset && std::binary_search(rough.lower[out[i]].begin(),
                                                      rough.lower[out[i]].end(), i)) {
                continue;
            }
            const double score =
                kind == proximity::distance
                    ? -squared_distance(points.row(i), rough.centroids.row(h))
                    : similarity(points.row(i), rough.centroids.row(h));
            if (out[i] == unset || score > best_score[i]) {
                out[i] = h;
                best_score[i] = score;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (out[i] == unset) {
            throw validation_error("crispify: gene " + std::to_string(i) + " is in no approximation");
        }
    }
    return out;
}

}  // namespace genecluster
