#ifndef GENECLUSTER_CLUSTERING_HPP
#define GENECLUSTER_CLUSTERING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genecluster/fuzzysoft.hpp"
#include "genecluster/matrix.hpp"

namespace genecluster {

/// Parameters shared by the three engines. kmeans reads only k, max_iter,
/// tol and seed.
struct rough_params {
    std::size_t k = 2;
    double w_lower = 0.7;
    double w_upper = 0.3;
    double epsilon = 1.2;
    std::size_t max_iter = 100;
    double tol = 1e-6;
    std::uint64_t seed = 1;
};

inline constexpr double default_rough_epsilon = 1.2;
inline constexpr double default_fsrk_epsilon = 0.95;

// Parameter checks per engine; all throw parameter_error.
void validate_kmeans_params(const rough_params& params, std::size_t n);
void validate_rough_params(const rough_params& params, std::size_t n);
void validate_fsrk_params(const rough_params& params, std::size_t n);

struct crisp_clustering {
    std::vector<std::size_t> assignment;  // gene -> cluster in [0, k)
    dense_matrix centroids;
    std::size_t iterations = 0;
    bool converged = false;
    double sse = 0.0;
    std::size_t empty_cluster_events = 0;
};

/// Lower and upper approximations per cluster. Index sets are kept sorted.
struct rough_approximation {
    std::vector<std::vector<std::size_t>> lower;
    std::vector<std::vector<std::size_t>> upper;

    std::size_t k() const noexcept { return lower.size(); }
    /// upper[h] minus lower[h].
    std::vector<std::size_t> boundary(std::size_t h) const;
};

struct rough_clustering : rough_approximation {
    dense_matrix centroids;
    std::size_t iterations = 0;
    bool converged = false;
    // Number of (iteration, cluster) pairs where a cluster had no members and
    // kept its previous centroid.
    std::size_t empty_cluster_events = 0;
};

/// Returns a description of the first violated rough-set membership axiom,
/// or nothing when all hold for genes 0..n-1.
std::optional<std::string> check_rough_axioms(const rough_approximation& rough, std::size_t n);

/// k distinct row indices drawn uniformly without replacement; deterministic
/// for a given seed on every platform.
std::vector<std::size_t> choose_seed_rows(std::size_t n, std::size_t k, std::uint64_t seed);

/// The rows picked by choose_seed_rows, as a k x m matrix.
dense_matrix init_centroids(const dense_matrix& data, std::size_t k, std::uint64_t seed);

using crisp_observer = std::function<void(const crisp_clustering&)>;
using rough_observer = std::function<void(const rough_clustering&)>;

/// Lloyd iteration: nearest-centroid assignment (ties to the lowest index),
/// then mean update, until no centroid coordinate moves more than tol or
/// max_iter passes. The observer sees the state after every pass.
crisp_clustering kmeans(const dense_matrix& data, const rough_params& params,
                        const crisp_observer& observer = {});
crisp_clustering kmeans(const dense_matrix& data, const rough_params& params,
                        const dense_matrix& initial_centroids, const crisp_observer& observer = {});

/// Distance-ratio rule: a gene whose distance to some other centroid is
/// within epsilon times its nearest distance goes to the upper approximation
/// of all such clusters; otherwise to the lower (and upper) of the nearest.
/// epsilon == 1 admits only the nearest centroid.
rough_approximation rough_assign(const dense_matrix& data, const dense_matrix& centroids,
                                 double epsilon);

/**
 * Weighted rough centroids.
 *
 * With a non-empty boundary B_h = upper[h] - lower[h]:
 *   Z_h = w_lower * mean(lower[h]) + w_upper * mean(B_h)
 * and Z_h = mean(B_h) when lower[h] is empty. With an empty boundary,
 * Z_h = mean(upper[h]). A cluster with no members at all keeps
 * previous.row(h); `empty_clusters`, when given, is incremented for each.
 */
dense_matrix rough_centroids(const dense_matrix& data, const rough_approximation& rough,
                             double w_lower, double w_upper, const dense_matrix& previous,
                             std::size_t* empty_clusters = nullptr);

rough_clustering rough_kmeans(const dense_matrix& data, const rough_params& params,
                              const rough_observer& observer = {});
rough_clustering rough_kmeans(const dense_matrix& data, const rough_params& params,
                              const dense_matrix& initial_centroids,
                              const rough_observer& observer = {});

/// Similarity-ratio rule: with S_best the highest fuzzy soft similarity of a
/// gene to any centroid, every cluster with S_h >= epsilon * S_best is a
/// candidate. One candidate puts the gene in that lower approximation; more
/// put it in each candidate's upper approximation only. epsilon == 1 admits
/// only the most similar centroid; S_best == 0 picks cluster 0.
rough_approximation fsrk_assign(const dense_matrix& memberships, const dense_matrix& centroids,
                                double epsilon);

/// Fuzzy soft rough k-means over fuzzified data. Throws domain_error when an
/// entry lies outside [0, 1].
rough_clustering fsrk_kmeans(const dense_matrix& memberships, const rough_params& params,
                             const rough_observer& observer = {});
rough_clustering fsrk_kmeans(const dense_matrix& memberships, const rough_params& params,
                             const dense_matrix& initial_centroids,
                             const rough_observer& observer = {});
rough_clustering fsrk_kmeans(const membership_matrix& memberships, const rough_params& params,
                             const rough_observer& observer = {});

}  // namespace genecluster

#endif  // GENECLUSTER_CLUSTERING_HPP
