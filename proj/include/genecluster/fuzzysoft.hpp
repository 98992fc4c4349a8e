#ifndef GENECLUSTER_FUZZYSOFT_HPP
#define GENECLUSTER_FUZZYSOFT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genecluster/ingest.hpp"
#include "genecluster/matrix.hpp"

namespace genecluster {

enum class membership_kind { s_shaped, z_shaped };

membership_kind parse_membership_kind(std::string_view text);  // "s" or "z"
std::string_view to_string(membership_kind kind);

/// Spline membership function rising (S) or falling (Z) between knots a and b.
/// With a == b the function is the constant 1.
struct membership_shape {
    membership_kind kind = membership_kind::s_shaped;
    double a = 0.0;
    double b = 1.0;
};

double membership(double x, const membership_shape& shape);

/// Fuzzified expression matrix: the fuzzy soft set whose parameters are the
/// samples. Every entry lies in [0, 1].
class membership_matrix {
public:
    membership_matrix() = default;
    membership_matrix(std::vector<std::string> gene_ids, std::vector<std::string> sample_ids,
                      dense_matrix values);

    const std::vector<std::string>& gene_ids() const noexcept { return gene_ids_; }
    const std::vector<std::string>& sample_ids() const noexcept { return sample_ids_; }
    const dense_matrix& values() const noexcept { return values_; }

private:
    std::vector<std::string> gene_ids_;
    std::vector<std::string> sample_ids_;
    dense_matrix values_;
};

/// Applies the membership function column by column, with knots at each
/// sample column's minimum and maximum.
membership_matrix fuzzify(const expression_matrix& matrix,
                          membership_kind kind = membership_kind::s_shaped);

/// Fuzzy soft set similarity 1 - sum|x - z| / sum(x + z). Two all-zero
/// vectors are identical (similarity 1).
double similarity(std::span<const double> x, std::span<const double> z);

/// Similarity of one gene against each centroid row; element h belongs to centroid h.
std::vector<double> similarity_profile(std::span<const double> gene, const dense_matrix& centroids);

}  // namespace genecluster

#endif  // GENECLUSTER_FUZZYSOFT_HPP
