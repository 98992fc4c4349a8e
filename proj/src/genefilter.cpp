#include "genecluster/genefilter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "genecluster/errors.hpp"

namespace genecluster {

namespace {

constexpr double distribution_tolerance = 1e-9;

// Entropy of an empirical histogram with the given total count.
double count_entropy(std::span<const std::size_t> counts, std::size_t total) {
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

std::size_t default_bin_count(std::size_t samples) {
    if (samples <= 1) return 1;
    return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(samples)))) + 1;
}

double entropy(std::span<const double> distribution) {
    double sum = 0.0;
    for (double p : distribution) {
        if (!(p >= 0.0)) throw invalid_distribution_error("entropy: negative or NaN probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > distribution_tolerance) {
        throw invalid_distribution_error("entropy: probabilities sum to " + std::to_string(sum));
    }
    double h = 0.0;
    for (double p : distribution) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

std::vector<std::size_t> discretize(std::span<const double> row, const discretization_spec& spec) {
    if (spec.bin_count == 0) throw parameter_error("discretize: bin count must be at least 1");
    std::vector<std::size_t> bins(row.size(), 0);
    if (row.empty()) return bins;
    const auto [lo_it, hi_it] = std::minmax_element(row.begin(), row.end());
    const double lo = *lo_it;
    const double width = *hi_it - lo;
    if (width <= 0.0) return bins;
    const double b = static_cast<double>(spec.bin_count);
    for (std::size_t j = 0; j < row.size(); ++j) {
        const auto bin = static_cast<std::size_t>(std::floor((row[j] - lo) * b / width));
        bins[j] = std::min(bin, spec.bin_count - 1);
    }
    return bins;
}

double information_gain(std::span<const double> gene_row, const class_labels& labels,
                        const discretization_spec& spec) {
    if (labels.class_count() < 2) {
        throw degenerate_labels_error("information_gain: at least 2 classes are required");
    }
    if (gene_row.size() != labels.sample_class.size()) {
        throw shape_error("information_gain: gene has " + std::to_string(gene_row.size()) +
                          " samples, labels cover " + std::to_string(labels.sample_class.size()));
    }
    const std::size_t m = gene_row.size();
    if (m == 0) return 0.0;

    const auto bins = discretize(gene_row, spec);
    const std::size_t nb = spec.bin_count;
    const std::size_t nc = labels.class_count();
    std::vector<std::size_t> joint(nb * nc, 0), bin_counts(nb, 0), class_counts(nc, 0);
    for (std::size_t j = 0; j < m; ++j) {
        const auto c = labels.sample_class[j];
        ++joint[bins[j] * nc + c];
        ++bin_counts[bins[j]];
        ++class_counts[c];
    }
    const double ig = count_entropy(bin_counts, m) + count_entropy(class_counts, m) -
                      count_entropy(joint, m);
    return std::max(0.0, ig);
}

gene_selection rank_and_select(const expression_matrix& matrix, const class_labels& labels,
                               const discretization_spec& spec, std::size_t top_n) {
    const std::size_t n = matrix.genes();
    if (top_n < 1 || top_n > n) {
        throw parameter_error("rank_and_select: top_n = " + std::to_string(top_n) +
                              " must lie in [1, " + std::to_string(n) + "]");
    }
    gene_ranking ranking;
    ranking.scores.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ranking.scores[i] = information_gain(matrix.values().row(i), labels, spec);
    }
    ranking.order.resize(n);
    std::iota(ranking.order.begin(), ranking.order.end(), std::size_t{0});
    std::stable_sort(ranking.order.begin(), ranking.order.end(), [&](std::size_t a, std::size_t b) {
        return ranking.scores[a] > ranking.scores[b];
    });

    std::vector<std::size_t> keep(ranking.order.begin(),
                                  ranking.order.begin() + static_cast<std::ptrdiff_t>(top_n));
    std::sort(keep.begin(), keep.end());
    auto filtered = matrix.select_genes(keep);
    return {std::move(ranking), std::move(filtered)};
}

void write_ranking(std::ostream& out, const expression_matrix& matrix, const gene_ranking& ranking) {
    out << "gene_id,ig_bits,rank\n";
    for (std::size_t r = 0; r < ranking.order.size(); ++r) {
        const auto g = ranking.order[r];
        out << matrix.gene_ids()[g] << ',' << format_double(ranking.scores[g]) << ',' << r + 1 << '\n';
    }
}

}  // namespace genecluster
