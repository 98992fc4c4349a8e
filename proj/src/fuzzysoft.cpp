#include "genecluster/fuzzysoft.hpp"

#include <algorithm>
#include <cmath>

#include "genecluster/errors.hpp"

namespace genecluster {

membership_kind parse_membership_kind(std::string_view text) {
    if (text == "s" || text == "S") return membership_kind::s_shaped;
    if (text == "z" || text == "Z") return membership_kind::z_shaped;
    throw parameter_error("membership kind must be 's' or 'z', got '" + std::string(text) + "'");
}

std::string_view to_string(membership_kind kind) {
    return kind == membership_kind::s_shaped ? "s" : "z";
}

double membership(double x, const membership_shape& shape) {
    const double a = shape.a;
    const double b = shape.b;
    if (!(a < b)) return 1.0;

    double s;
    if (x <= a) {
        s = 0.0;
    } else if (x >= b) {
        s = 1.0;
    } else if (x <= 0.5 * (a + b)) {
        const double t = (x - a) / (b - a);
        s = 2.0 * t * t;
    } else {
        const double t = (x - b) / (b - a);
        s = 1.0 - 2.0 * t * t;
    }
    return shape.kind == membership_kind::s_shaped ? s : 1.0 - s;
}

membership_matrix::membership_matrix(std::vector<std::string> gene_ids,
                                     std::vector<std::string> sample_ids, dense_matrix values)
    : gene_ids_(std::move(gene_ids)), sample_ids_(std::move(sample_ids)), values_(std::move(values)) {
    if (values_.rows() != gene_ids_.size() ||
        (values_.rows() > 0 && values_.cols() != sample_ids_.size())) {
        throw shape_error("membership_matrix: shape does not match identifiers");
    }
    for (double v : values_.values()) {
        if (!(v >= 0.0 && v <= 1.0)) throw domain_error("membership_matrix: entry outside [0, 1]");
    }
}

membership_matrix fuzzify(const expression_matrix& matrix, membership_kind kind) {
    const auto& x = matrix.values();
    dense_matrix out(x.rows(), matrix.samples());
    for (std::size_t j = 0; j < matrix.samples() && x.rows() > 0; ++j) {
        double lo = x(0, j), hi = x(0, j);
        for (std::size_t i = 1; i < x.rows(); ++i) {
            lo = std::min(lo, x(i, j));
            hi = std::max(hi, x(i, j));
        }
        const membership_shape shape{kind, lo, hi};
        for (std::size_t i = 0; i < x.rows(); ++i) out(i, j) = membership(x(i, j), shape);
    }
    return {matrix.gene_ids(), matrix.sample_ids(), std::move(out)};
}

double similarity(std::span<const double> x, std::span<const double> z) {
    if (x.size() != z.size()) {
        throw shape_error("similarity: vectors of length " + std::to_string(x.size()) + " and " +
                          std::to_string(z.size()));
    }
    double diff = 0.0, total = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        diff += std::abs(x[j] - z[j]);
        total += x[j] + z[j];
    }
    if (total == 0.0) return 1.0;
    return 1.0 - diff / total;
}

std::vector<double> similarity_profile(std::span<const double> gene, const dense_matrix& centroids) {
    std::vector<double> profile(centroids.rows());
    for (std::size_t h = 0; h < centroids.rows(); ++h) profile[h] = similarity(gene, centroids.row(h));
    return profile;
}

}  // namespace genecluster
