#ifndef GENECLUSTER_MATRIX_HPP
#define GENECLUSTER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace genecluster {

/// Dense row-major matrix of doubles. Rows are the objects being clustered
/// (genes), columns their attributes (samples).
class dense_matrix {
public:
    dense_matrix() = default;
    dense_matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    dense_matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    /// Builds a matrix from nested row lists; all rows must have equal length.
    static dense_matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static dense_matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }

    const std::vector<double>& values() const noexcept { return values_; }

    /// Copies the listed rows, in the order given.
    dense_matrix select_rows(std::span<const std::size_t> indices) const;

    bool operator==(const dense_matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);
double euclidean_distance(std::span<const double> a, std::span<const double> b);

}  // namespace genecluster

#endif  // GENECLUSTER_MATRIX_HPP
