#ifndef GENECLUSTER_TESTS_SUPPORT_HPP
#define GENECLUSTER_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "genecluster/matrix.hpp"
#include "oracles.hpp"

namespace testing_support {

// n points in m dimensions scattered around `groups` random centers.
inline genecluster::dense_matrix blobs(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                       std::size_t groups, double spread, double box = 10.0) {
    std::uniform_real_distribution<double> center(-box, box);
    std::normal_distribution<double> noise(0.0, spread);
    std::vector<std::vector<double>> centers(groups, std::vector<double>(m));
    for (auto& c : centers)
        for (auto& v : c) v = center(rng);
    genecluster::dense_matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = centers[i % groups];
        for (std::size_t j = 0; j < m; ++j) out(i, j) = c[j] + noise(rng);
    }
    return out;
}

inline genecluster::dense_matrix uniform_unit(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    genecluster::dense_matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) out(i, j) = u(rng);
    return out;
}

inline oracle::points to_points(const genecluster::dense_matrix& m) {
    oracle::points out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace testing_support

#endif  // GENECLUSTER_TESTS_SUPPORT_HPP
