#ifndef GENECLUSTER_INGEST_HPP
#define GENECLUSTER_INGEST_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genecluster/matrix.hpp"

namespace genecluster {

/**
 * Gene expression matrix: genes as rows, samples as columns.
 *
 * Invariants checked at construction: the value matrix shape matches the id
 * lists, gene ids and sample ids are pairwise distinct, and every value is
 * finite. The object is immutable afterwards.
 */
class expression_matrix {
public:
    expression_matrix() = default;
    expression_matrix(std::vector<std::string> gene_ids, std::vector<std::string> sample_ids,
                      dense_matrix values);

    const std::vector<std::string>& gene_ids() const noexcept { return gene_ids_; }
    const std::vector<std::string>& sample_ids() const noexcept { return sample_ids_; }
    const dense_matrix& values() const noexcept { return values_; }

    std::size_t genes() const noexcept { return values_.rows(); }
    std::size_t samples() const noexcept { return sample_ids_.size(); }

    /// Sub-matrix over the listed genes, in the order given. Samples unchanged.
    expression_matrix select_genes(const std::vector<std::size_t>& indices) const;

    bool operator==(const expression_matrix&) const = default;

private:
    std::vector<std::string> gene_ids_;
    std::vector<std::string> sample_ids_;
    dense_matrix values_;
};

/// Per-sample class tags, aligned with the sample order of one matrix.
struct class_labels {
    std::map<std::string, std::string> labels;  // sample id -> class tag
    std::vector<std::string> classes;           // distinct tags, first-seen order
    std::vector<std::size_t> sample_class;      // index into classes, per matrix column

    std::size_t class_count() const noexcept { return classes.size(); }
};

struct parse_options {
    // Field delimiter; auto-detected from the header row when unset
    // (tab if present, else comma).
    std::optional<char> delimiter;
    // Whether the header row starts with a corner cell above the gene id column.
    bool header_has_corner = true;
};

expression_matrix parse_matrix(std::istream& in, const parse_options& options = {});
expression_matrix read_matrix(const std::filesystem::path& path, const parse_options& options = {});

/// Parses "sample_id<delim>class" rows. Blank lines and lines starting with
/// '#' are skipped, so a commented header is allowed.
class_labels parse_labels(std::istream& in, const expression_matrix& matrix,
                          std::optional<char> delimiter = std::nullopt);
class_labels read_labels(const std::filesystem::path& path, const expression_matrix& matrix,
                         std::optional<char> delimiter = std::nullopt);

/// Writes the matrix in the layout parse_matrix accepts. Values use the
/// shortest decimal form that reads back to the same double.
void write_matrix(std::ostream& out, const std::vector<std::string>& gene_ids,
                  const std::vector<std::string>& sample_ids, const dense_matrix& values,
                  char delimiter = '\t', const std::string& corner = "gene");
void write_matrix(std::ostream& out, const expression_matrix& matrix, char delimiter = '\t');

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace genecluster

#endif  // GENECLUSTER_INGEST_HPP
