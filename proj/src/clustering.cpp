#include "genecluster/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "genecluster/errors.hpp"

namespace genecluster {

namespace {

// Uniform integer in [0, range) from a 64-bit engine, by rejection, so the
// sequence depends only on the engine (std::mt19937_64 is fully specified).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
    const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod range
    while (true) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % range;
    }
}

void mean_of(const dense_matrix& data, const std::vector<std::size_t>& members,
             std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (auto i : members) {
        const auto x = data.row(i);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[j];
    }
    const double count = static_cast<double>(members.size());
    for (auto& v : out) v /= count;
}

double max_displacement(const dense_matrix& a, const dense_matrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
    }
    return d;
}

void check_centroid_shape(const dense_matrix& data, const dense_matrix& centroids, std::size_t k) {
    if (centroids.rows() != k || centroids.cols() != data.cols()) {
        throw shape_error("initial centroids must be " + std::to_string(k) + "x" +
                          std::to_string(data.cols()));
    }
}

void check_unit_interval(const dense_matrix& m, const char* what) {
    for (double v : m.values()) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw domain_error(std::string(what) + " has an entry outside [0, 1]; fuzzify first");
        }
    }
}

std::size_t nearest(const dense_matrix& centroids, std::span<const double> x) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < centroids.rows(); ++h) {
        const double d = squared_distance(x, centroids.row(h));
        if (d < best_d) {
            best_d = d;
            best = h;
        }
    }
    return best;
}

double crisp_sse(const dense_matrix& data, const std::vector<std::size_t>& assignment,
                 const dense_matrix& centroids) {
    double sse = 0.0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        sse += squared_distance(data.row(i), centroids.row(assignment[i]));
    }
    return sse;
}

rough_approximation make_approximation(std::size_t k) {
    rough_approximation r;
    r.lower.resize(k);
    r.upper.resize(k);
    return r;
}

void place(rough_approximation& r, std::size_t gene, const std::vector<std::size_t>& candidates) {
    if (candidates.size() == 1) {
        r.lower[candidates.front()].push_back(gene);
        r.upper[candidates.front()].push_back(gene);
        return;
    }
    for (auto h : candidates) r.upper[h].push_back(gene);
}

template <typename Assign>
rough_clustering iterate_rough(const dense_matrix& data, const rough_params& params,
                               const dense_matrix& initial_centroids, Assign assign,
                               const rough_observer& observer, bool clamp_unit = false) {
    rough_clustering state;
    state.centroids = initial_centroids;
    for (std::size_t iter = 1; iter <= params.max_iter; ++iter) {
        static_cast<rough_approximation&>(state) = assign(data, state.centroids, params.epsilon);
        auto next = rough_centroids(data, state, params.w_lower, params.w_upper, state.centroids,
                                    &state.empty_cluster_events);
        if (clamp_unit) {
            // Convex combinations of [0,1] rows; clamp away rounding overshoot.
            for (std::size_t h = 0; h < next.rows(); ++h) {
                for (auto& v : next.row(h)) v = std::clamp(v, 0.0, 1.0);
            }
        }
        const double moved = max_displacement(next, state.centroids);
        state.centroids = std::move(next);
        state.iterations = iter;
        state.converged = moved <= params.tol;
        if (observer) observer(state);
        if (state.converged) break;
    }
    return state;
}

}  // namespace

void validate_kmeans_params(const rough_params& params, std::size_t n) {
    if (params.k < 1) throw parameter_error("k must be at least 1");
    if (params.k > n) {
        throw parameter_error("k = " + std::to_string(params.k) + " exceeds the " +
                              std::to_string(n) + " available genes");
    }
    if (params.max_iter < 1) throw parameter_error("max_iter must be at least 1");
    if (!(params.tol >= 0.0)) throw parameter_error("tol must be non-negative");
}

static void validate_weights(const rough_params& params) {
    const bool in_range = params.w_lower >= 0.0 && params.w_lower <= 1.0 &&
                          params.w_upper >= 0.0 && params.w_upper <= 1.0;
    if (!in_range || std::abs(params.w_lower + params.w_upper - 1.0) > 1e-9) {
        throw parameter_error("w_lower and w_upper must lie in [0, 1] and sum to 1");
    }
}

void validate_rough_params(const rough_params& params, std::size_t n) {
    validate_kmeans_params(params, n);
    validate_weights(params);
    if (!(params.epsilon >= 1.0)) {
        throw parameter_error("rough k-means epsilon must be >= 1 (distance ratio)");
    }
}

void validate_fsrk_params(const rough_params& params, std::size_t n) {
    validate_kmeans_params(params, n);
    validate_weights(params);
    if (!(params.epsilon > 0.0 && params.epsilon <= 1.0)) {
        throw parameter_error("fuzzy soft rough k-means epsilon must lie in (0, 1] (similarity ratio)");
    }
}

std::vector<std::size_t> rough_approximation::boundary(std::size_t h) const {
    std::vector<std::size_t> out;
    std::set_difference(upper[h].begin(), upper[h].end(), lower[h].begin(), lower[h].end(),
                        std::back_inserter(out));
    return out;
}

std::optional<std::string> check_rough_axioms(const rough_approximation& rough, std::size_t n) {
    const std::size_t k = rough.k();
    if (rough.upper.size() != k) return "lower and upper hold different cluster counts";
    std::vector<std::size_t> lower_count(n, 0), upper_count(n, 0);
    std::vector<std::size_t> lower_cluster(n, k);
    for (std::size_t h = 0; h < k; ++h) {
        if (!std::includes(rough.upper[h].begin(), rough.upper[h].end(), rough.lower[h].begin(),
                           rough.lower[h].end())) {
            return "lower approximation of cluster " + std::to_string(h) + " is not within its upper";
        }
        for (auto i : rough.lower[h]) {
            if (i >= n) return "gene index " + std::to_string(i) + " out of range";
            ++lower_count[i];
            lower_cluster[i] = h;
        }
        for (auto i : rough.upper[h]) {
            if (i >= n) return "gene index " + std::to_string(i) + " out of range";
            ++upper_count[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto gene = std::to_string(i);
        if (upper_count[i] == 0) return "gene " + gene + " is in no upper approximation";
        if (lower_count[i] > 1) return "gene " + gene + " is in more than one lower approximation";
        if (lower_count[i] == 1 && upper_count[i] != 1) {
            return "gene " + gene + " is certain in cluster " + std::to_string(lower_cluster[i]) +
                   " but possible in another";
        }
        if (lower_count[i] == 0 && upper_count[i] < 2) {
            return "gene " + gene + " is in no lower approximation and fewer than two uppers";
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> choose_seed_rows(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) {
        throw parameter_error("cannot choose " + std::to_string(k) + " distinct rows from " +
                              std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(bounded(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

dense_matrix init_centroids(const dense_matrix& data, std::size_t k, std::uint64_t seed) {
    const auto rows = choose_seed_rows(data.rows(), k, seed);
    return data.select_rows(rows);
}

crisp_clustering kmeans(const dense_matrix& data, const rough_params& params,
                        const crisp_observer& observer) {
    validate_kmeans_params(params, data.rows());
    return kmeans(data, params, init_centroids(data, params.k, params.seed), observer);
}

crisp_clustering kmeans(const dense_matrix& data, const rough_params& params,
                        const dense_matrix& initial_centroids, const crisp_observer& observer) {
    validate_kmeans_params(params, data.rows());
    check_centroid_shape(data, initial_centroids, params.k);

    const std::size_t n = data.rows();
    crisp_clustering state;
    state.assignment.assign(n, 0);
    state.centroids = initial_centroids;
    std::vector<std::vector<std::size_t>> members(params.k);

    for (std::size_t iter = 1; iter <= params.max_iter; ++iter) {
        for (auto& m : members) m.clear();
        for (std::size_t i = 0; i < n; ++i) {
            state.assignment[i] = nearest(state.centroids, data.row(i));
            members[state.assignment[i]].push_back(i);
        }
        dense_matrix next = state.centroids;
        for (std::size_t h = 0; h < params.k; ++h) {
            if (members[h].empty()) {
                ++state.empty_cluster_events;
                continue;
            }
            mean_of(data, members[h], next.row(h));
        }
        const double moved = max_displacement(next, state.centroids);
        state.centroids = std::move(next);
        state.iterations = iter;
        state.converged = moved <= params.tol;
        state.sse = crisp_sse(data, state.assignment, state.centroids);
        if (observer) observer(state);
        if (state.converged) break;
    }
    return state;
}

rough_approximation rough_assign(const dense_matrix& data, const dense_matrix& centroids,
                                 double epsilon) {
    if (centroids.cols() != data.cols()) throw shape_error("rough_assign: centroid width mismatch");
    const std::size_t k = centroids.rows();
    auto out = make_approximation(k);
    std::vector<double> dist(k);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        std::size_t best = 0;
        for (std::size_t h = 0; h < k; ++h) {
            dist[h] = euclidean_distance(data.row(i), centroids.row(h));
            if (dist[h] < dist[best]) best = h;
        }
        candidates.assign(1, best);
        if (dist[best] > 0.0 && epsilon > 1.0) {
            for (std::size_t h = 0; h < k; ++h) {
                if (h != best && dist[h] / dist[best] <= epsilon) candidates.push_back(h);
            }
        }
        place(out, i, candidates);
    }
    return out;
}

dense_matrix rough_centroids(const dense_matrix& data, const rough_approximation& rough,
                             double w_lower, double w_upper, const dense_matrix& previous,
                             std::size_t* empty_clusters) {
    const std::size_t k = rough.k();
    if (previous.rows() != k || previous.cols() != data.cols()) {
        throw shape_error("rough_centroids: previous centroids must be k x m");
    }
    dense_matrix out = previous;
    std::vector<double> lower_mean(data.cols()), boundary_mean(data.cols());
    for (std::size_t h = 0; h < k; ++h) {
        const auto& lower = rough.lower[h];
        const auto boundary = rough.boundary(h);
        auto z = out.row(h);
        if (boundary.empty()) {
            if (rough.upper[h].empty()) {
                if (empty_clusters) ++*empty_clusters;
                continue;
            }
            mean_of(data, rough.upper[h], z);
        } else if (lower.empty()) {
            mean_of(data, boundary, z);
        } else {
            mean_of(data, lower, lower_mean);
            mean_of(data, boundary, boundary_mean);
            for (std::size_t j = 0; j < z.size(); ++j) {
                z[j] = w_lower * lower_mean[j] + w_upper * boundary_mean[j];
            }
        }
    }
    return out;
}

rough_clustering rough_kmeans(const dense_matrix& data, const rough_params& params,
                              const rough_observer& observer) {
    validate_rough_params(params, data.rows());
    return rough_kmeans(data, params, init_centroids(data, params.k, params.seed), observer);
}

rough_clustering rough_kmeans(const dense_matrix& data, const rough_params& params,
                              const dense_matrix& initial_centroids, const rough_observer& observer) {
    validate_rough_params(params, data.rows());
    check_centroid_shape(data, initial_centroids, params.k);
    return iterate_rough(data, params, initial_centroids, rough_assign, observer);
}

rough_approximation fsrk_assign(const dense_matrix& memberships, const dense_matrix& centroids,
                                double epsilon) {
    if (centroids.cols() != memberships.cols()) {
        throw shape_error("fsrk_assign: centroid width mismatch");
    }
    auto out = make_approximation(centroids.rows());
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < memberships.rows(); ++i) {
        const auto profile = similarity_profile(memberships.row(i), centroids);
        std::size_t best = 0;
        for (std::size_t h = 1; h < profile.size(); ++h) {
            if (profile[h] > profile[best]) best = h;
        }
        candidates.assign(1, best);
        if (profile[best] > 0.0 && epsilon < 1.0) {
            for (std::size_t h = 0; h < profile.size(); ++h) {
                if (h != best && profile[h] / profile[best] >= epsilon) candidates.push_back(h);
            }
        }
        place(out, i, candidates);
    }
    return out;
}

rough_clustering fsrk_kmeans(const dense_matrix& memberships, const rough_params& params,
                             const rough_observer& observer) {
    validate_fsrk_params(params, memberships.rows());
    check_unit_interval(memberships, "fsrk_kmeans input");
    return fsrk_kmeans(memberships, params, init_centroids(memberships, params.k, params.seed),
                       observer);
}

rough_clustering fsrk_kmeans(const dense_matrix& memberships, const rough_params& params,
                             const dense_matrix& initial_centroids, const rough_observer& observer) {
    validate_fsrk_params(params, memberships.rows());
    check_unit_interval(memberships, "fsrk_kmeans input");
    check_centroid_shape(memberships, initial_centroids, params.k);
    check_unit_interval(initial_centroids, "fsrk_kmeans initial centroids");
    return iterate_rough(memberships, params, initial_centroids, fsrk_assign, observer, true);
}

rough_clustering fsrk_kmeans(const membership_matrix& memberships, const rough_params& params,
                             const rough_observer& observer) {
    return fsrk_kmeans(memberships.values(), params, observer);
}

}  // namespace genecluster
