#ifndef GENECLUSTER_GENEFILTER_HPP
#define GENECLUSTER_GENEFILTER_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "genecluster/ingest.hpp"

namespace genecluster {

/// Equal-width binning of one gene over its observed [min, max].
struct discretization_spec {
    std::size_t bin_count = 2;
};

/// Sturges' rule, ceil(log2(m)) + 1, for m samples.
std::size_t default_bin_count(std::size_t samples);

struct gene_ranking {
    std::vector<double> scores;       // information gain in bits, per gene index
    std::vector<std::size_t> order;   // gene indices, best first
};

/// Shannon entropy in bits. Entries must be non-negative and sum to 1 within
/// 1e-9; 0*log(0) is taken as 0.
double entropy(std::span<const double> distribution);

/// Bin index in [0, bin_count) for every value of the row. A constant row
/// maps entirely to bin 0.
std::vector<std::size_t> discretize(std::span<const double> row, const discretization_spec& spec);

/// IG(X;Y) = H(X) + H(Y) - H(X,Y) between the discretized gene X and the
/// class variable Y, in bits.
double information_gain(std::span<const double> gene_row, const class_labels& labels,
                        const discretization_spec& spec);

struct gene_selection {
    gene_ranking ranking;
    expression_matrix filtered;
};

/// Ranks every gene by information gain (ties by gene index) and keeps the
/// top_n best, in their original relative order.
gene_selection rank_and_select(const expression_matrix& matrix, const class_labels& labels,
                               const discretization_spec& spec, std::size_t top_n);

/// CSV with columns gene_id, ig_bits, rank (1-based), in rank order.
void write_ranking(std::ostream& out, const expression_matrix& matrix, const gene_ranking& ranking);

}  // namespace genecluster

#endif  // GENECLUSTER_GENEFILTER_HPP
