#include "genecluster/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "genecluster/errors.hpp"

namespace genecluster {

dense_matrix::dense_matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

dense_matrix::dense_matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (values_.size() != rows * cols) {
        throw shape_error("dense_matrix: " + std::to_string(values_.size()) +
                          " values do not fill " + std::to_string(rows) + "x" +
                          std::to_string(cols));
    }
}

dense_matrix dense_matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<std::vector<double>> copy;
    copy.reserve(rows.size());
    for (const auto& r : rows) copy.emplace_back(r);
    return from_rows(copy);
}

dense_matrix dense_matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw shape_error("dense_matrix: ragged row list");
        values.insert(values.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(values)};
}

dense_matrix dense_matrix::select_rows(std::span<const std::size_t> indices) const {
    dense_matrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= rows_) throw shape_error("select_rows: row index out of range");
        const auto src = row(indices[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw shape_error("squared_distance: length mismatch");
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        sum += d * d;
    }
    return sum;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

}  // namespace genecluster
