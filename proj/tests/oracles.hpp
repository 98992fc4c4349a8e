// Independent reference implementations used only by the tests. Each one
// follows the textbook definition directly (maps, sets, explicit loops) and
// shares no code path with the library routine it checks.
#ifndef GENECLUSTER_TESTS_ORACLES_HPP
#define GENECLUSTER_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline double entropy_bits(const std::vector<double>& p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log(x) / std::log(2.0);
    }
    return h;
}

// Equal-width bin of integer-valued data, in exact integer arithmetic.
inline std::vector<int> integer_bins(const std::vector<int>& values, int bins) {
    const int lo = *std::min_element(values.begin(), values.end());
    const int hi = *std::max_element(values.begin(), values.end());
    std::vector<int> out;
    for (int v : values) {
        if (hi == lo) {
            out.push_back(0);
            continue;
        }
        out.push_back(std::min(bins - 1, (v - lo) * bins / (hi - lo)));
    }
    return out;
}

// Information gain from a joint histogram of (bin, class) pairs.
inline double information_gain(const std::vector<int>& bins, const std::vector<int>& classes) {
    std::map<std::pair<int, int>, int> joint;
    std::map<int, int> x, y;
    for (std::size_t j = 0; j < bins.size(); ++j) {
        ++joint[{bins[j], classes[j]}];
        ++x[bins[j]];
        ++y[classes[j]];
    }
    const double m = static_cast<double>(bins.size());
    std::vector<double> px, py, pxy;
    for (auto& [k, c] : x) px.push_back(c / m);
    for (auto& [k, c] : y) py.push_back(c / m);
    for (auto& [k, c] : joint) pxy.push_back(c / m);
    return entropy_bits(px) + entropy_bits(py) - entropy_bits(pxy);
}

using points = std::vector<std::vector<double>>;

inline double sq(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
    return s;
}

// Minimal SSE over every split of 1-D data into two non-empty groups.
inline double best_two_partition_sse(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        if (mask & 1) continue;  // fix point 0 in group B to skip mirrored splits
        double sum[2] = {0, 0};
        int cnt[2] = {0, 0};
        for (std::size_t i = 0; i < n; ++i) {
            const int g = (mask >> i) & 1;
            sum[g] += xs[i];
            ++cnt[g];
        }
        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const int g = (mask >> i) & 1;
            const double mean = sum[g] / cnt[g];
            sse += (xs[i] - mean) * (xs[i] - mean);
        }
        best = std::min(best, sse);
    }
    return best;
}

inline double davies_bouldin(const points& data, const std::vector<std::size_t>& label,
                             const points& centroids) {
    const std::size_t k = centroids.size();
    std::vector<double> sigma(k);
    for (std::size_t h = 0; h < k; ++h) {
        double total = 0.0;
        int count = 0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (label[i] != h) continue;
            total += std::sqrt(sq(data[i], centroids[h]));
            ++count;
        }
        sigma[h] = total / count;
    }
    double db = 0.0;
    for (std::size_t h = 0; h < k; ++h) {
        double worst = -1.0;
        for (std::size_t g = 0; g < k; ++g) {
            if (g != h) worst = std::max(worst, (sigma[h] + sigma[g]) / std::sqrt(sq(centroids[h], centroids[g])));
        }
        db += worst;
    }
    return db / k;
}

inline double xie_beni(const points& data, const std::vector<std::size_t>& label,
                       const points& centroids) {
    const std::size_t k = centroids.size();
    double num = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t h = 0; h < k; ++h) {
            const double u = label[i] == h ? 1.0 : 0.0;
            if (u != 0.0) num += u * sq(data[i], centroids[h]);
        }
    }
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t h = 0; h < k; ++h) {
        for (std::size_t g = 0; g < k; ++g) {
            if (g != h) sep = std::min(sep, sq(centroids[h], centroids[g]));
        }
    }
    return num / (data.size() * sep);
}

// Set-based check of the four rough membership axioms.
inline std::string rough_axiom_violation(const std::vector<std::vector<std::size_t>>& lower,
                                         const std::vector<std::vector<std::size_t>>& upper,
                                         std::size_t n) {
    const std::size_t k = lower.size();
    std::vector<std::set<std::size_t>> lo(k), up(k);
    for (std::size_t h = 0; h < k; ++h) {
        lo[h].insert(lower[h].begin(), lower[h].end());
        up[h].insert(upper[h].begin(), upper[h].end());
        for (auto i : lo[h]) {
            if (!up[h].count(i)) return "lower not subset of upper";
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        int in_lower = 0, in_upper = 0;
        for (std::size_t h = 0; h < k; ++h) {
            in_lower += static_cast<int>(lo[h].count(i));
            in_upper += static_cast<int>(up[h].count(i));
        }
        if (in_lower > 1) return "gene in two lower approximations";
        if (in_lower == 1 && in_upper > 1) return "certain gene also possible elsewhere";
        if (in_lower == 0 && in_upper < 2) return "uncertain gene in fewer than two uppers";
        if (in_upper == 0) return "gene uncovered";
    }
    return {};
}

struct rough_result {
    std::vector<std::set<std::size_t>> lower, upper;
    points centroids;
    int iterations = 0;
};

// Literal replay of fuzzy soft rough k-means: starting from given centroids,
// repeat (similarity of every gene to every centroid; ratio rule S_h / S_max
// >= eps; weighted lower/boundary centroids) until the centroids stop moving.
inline rough_result fsrk_replay(const points& x, points z, double eps, double w_lower,
                                double w_upper, int max_iter, double tol) {
    const std::size_t n = x.size(), k = z.size(), m = x[0].size();
    rough_result r;
    for (int iter = 1; iter <= max_iter; ++iter) {
        r.lower.assign(k, {});
        r.upper.assign(k, {});
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> s(k);
            for (std::size_t h = 0; h < k; ++h) {
                double num = 0.0, den = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    num += std::fabs(x[i][j] - z[h][j]);
                    den += x[i][j] + z[h][j];
                }
                s[h] = den == 0.0 ? 1.0 : 1.0 - num / den;
            }
            std::size_t best = 0;
            for (std::size_t h = 1; h < k; ++h) {
                if (s[h] > s[best]) best = h;
            }
            std::vector<std::size_t> chosen{best};
            for (std::size_t h = 0; h < k; ++h) {
                if (h != best && s[best] > 0.0 && eps < 1.0 && s[h] / s[best] >= eps) chosen.push_back(h);
            }
            if (chosen.size() == 1) r.lower[best].insert(i);
            for (auto h : chosen) r.upper[h].insert(i);
        }
        points next = z;
        for (std::size_t h = 0; h < k; ++h) {
            std::set<std::size_t> boundary;
            for (auto i : r.upper[h]) {
                if (!r.lower[h].count(i)) boundary.insert(i);
            }
            auto mean = [&](const std::set<std::size_t>& members) {
                std::vector<double> c(m, 0.0);
                for (auto i : members) {
                    for (std::size_t j = 0; j < m; ++j) c[j] += x[i][j];
                }
                for (auto& v : c) v /= members.size();
                return c;
            };
            if (r.upper[h].empty()) continue;
            if (boundary.empty()) {
                next[h] = mean(r.upper[h]);
            } else if (r.lower[h].empty()) {
                next[h] = mean(boundary);
            } else {
                const auto a = mean(r.lower[h]);
                const auto b = mean(boundary);
                for (std::size_t j = 0; j < m; ++j) next[h][j] = w_lower * a[j] + w_upper * b[j];
            }
        }
        double moved = 0.0;
        for (std::size_t h = 0; h < k; ++h) {
            for (std::size_t j = 0; j < m; ++j) moved = std::max(moved, std::fabs(next[h][j] - z[h][j]));
        }
        z = next;
        r.iterations = iter;
        if (moved <= tol) break;
    }
    r.centroids = z;
    return r;
}

}  // namespace oracle

#endif  // GENECLUSTER_TESTS_ORACLES_HPP
