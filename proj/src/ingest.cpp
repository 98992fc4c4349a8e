#include "genecluster/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "genecluster/errors.hpp"

namespace genecluster {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line, char delim) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

// Reads one line, dropping a CR left by CRLF endings and a leading UTF-8 BOM.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    return true;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

char detect_delimiter(std::string_view header) {
    if (header.find('\t') != std::string_view::npos) return '\t';
    if (header.find(',') != std::string_view::npos) return ',';
    return '\t';
}

std::optional<double> parse_number(std::string_view field) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (field.empty()) return std::nullopt;
    double value = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) return std::nullopt;
    return value;
}

template <typename Ids>
void require_unique(const Ids& ids, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            throw validation_error(std::string("duplicate ") + what + " id '" + std::string(id) + "'");
        }
    }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

expression_matrix::expression_matrix(std::vector<std::string> gene_ids,
                                     std::vector<std::string> sample_ids, dense_matrix values)
    : gene_ids_(std::move(gene_ids)), sample_ids_(std::move(sample_ids)), values_(std::move(values)) {
    if (values_.rows() != gene_ids_.size()) {
        throw shape_error("expression_matrix: " + std::to_string(values_.rows()) + " rows but " +
                          std::to_string(gene_ids_.size()) + " gene ids");
    }
    // An empty value matrix carries no column count of its own.
    if (values_.rows() > 0 && values_.cols() != sample_ids_.size()) {
        throw shape_error("expression_matrix: " + std::to_string(values_.cols()) + " columns but " +
                          std::to_string(sample_ids_.size()) + " sample ids");
    }
    if (values_.rows() == 0) values_ = dense_matrix(0, sample_ids_.size());
    require_unique(gene_ids_, "gene");
    require_unique(sample_ids_, "sample");
    for (std::size_t i = 0; i < values_.rows(); ++i) {
        for (std::size_t j = 0; j < values_.cols(); ++j) {
            if (!std::isfinite(values_(i, j))) {
                throw data_error("non-finite value for gene '" + gene_ids_[i] + "'", i + 1, j + 1);
            }
        }
    }
}

expression_matrix expression_matrix::select_genes(const std::vector<std::size_t>& indices) const {
    std::vector<std::string> ids;
    ids.reserve(indices.size());
    for (auto i : indices) {
        if (i >= gene_ids_.size()) throw shape_error("select_genes: gene index out of range");
        ids.push_back(gene_ids_[i]);
    }
    return {std::move(ids), sample_ids_, values_.select_rows(indices)};
}

expression_matrix parse_matrix(std::istream& in, const parse_options& options) {
    std::string line;
    std::size_t line_no = 0;

    bool have_header = false;
    while (next_line(in, line, line_no)) {
        if (!is_blank(line)) {
            have_header = true;
            break;
        }
    }
    if (!have_header) throw parse_error("expression file has no header row", line_no);

    const char delim = options.delimiter.value_or(detect_delimiter(line));
    auto header = split(line, delim);
    if (options.header_has_corner) header.erase(header.begin());
    std::vector<std::string> sample_ids(header.begin(), header.end());
    for (std::size_t j = 0; j < sample_ids.size(); ++j) {
        if (sample_ids[j].empty()) {
            throw parse_error("empty sample id in header column " + std::to_string(j + 1), line_no);
        }
    }
    const std::size_t m = sample_ids.size();

    std::vector<std::string> gene_ids;
    std::vector<double> values;
    while (next_line(in, line, line_no)) {
        if (is_blank(line)) continue;
        const auto fields = split(line, delim);
        const std::size_t row = gene_ids.size() + 1;
        if (fields.size() != m + 1) {
            throw parse_error("row " + std::to_string(row) + " (line " + std::to_string(line_no) +
                                  ") has " + std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(m + 1),
                              line_no);
        }
        if (fields[0].empty()) {
            throw validation_error("row " + std::to_string(row) + " has an empty gene id");
        }
        gene_ids.emplace_back(fields[0]);
        for (std::size_t j = 1; j <= m; ++j) {
            const auto value = parse_number(fields[j]);
            if (!value) {
                throw data_error(
                    (fields[j].empty() ? std::string("missing value")
                                       : "non-numeric value '" + std::string(fields[j]) + "'") +
                        " at row " + std::to_string(row) + ", column " + std::to_string(j),
                    row, j);
            }
            values.push_back(*value);
        }
    }

    const std::size_t n = gene_ids.size();
    return {std::move(gene_ids), std::move(sample_ids), dense_matrix(n, m, std::move(values))};
}

expression_matrix read_matrix(const std::filesystem::path& path, const parse_options& options) {
    auto in = open_or_throw(path);
    return parse_matrix(in, options);
}

class_labels parse_labels(std::istream& in, const expression_matrix& matrix,
                          std::optional<char> delimiter) {
    std::map<std::string, std::size_t> column_of;
    for (std::size_t j = 0; j < matrix.sample_ids().size(); ++j) column_of[matrix.sample_ids()[j]] = j;

    class_labels out;
    out.sample_class.assign(matrix.samples(), 0);
    std::vector<bool> seen(matrix.samples(), false);

    std::string line;
    std::size_t line_no = 0;
    while (next_line(in, line, line_no)) {
        const auto trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        const char delim = delimiter.value_or(detect_delimiter(line));
        const auto fields = split(line, delim);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw parse_error("labels line " + std::to_string(line_no) +
                                  " must hold a sample id and a class tag",
                              line_no);
        }
        const std::string sample(fields[0]);
        const std::string tag(fields[1]);
        const auto col = column_of.find(sample);
        if (col == column_of.end()) {
            throw validation_error("labels file names unknown sample '" + sample + "'");
        }
        if (seen[col->second]) {
            throw validation_error("sample '" + sample + "' is labeled more than once");
        }
        seen[col->second] = true;

        auto it = std::find(out.classes.begin(), out.classes.end(), tag);
        if (it == out.classes.end()) it = out.classes.insert(out.classes.end(), tag);
        out.sample_class[col->second] = static_cast<std::size_t>(it - out.classes.begin());
        out.labels.emplace(sample, tag);
    }

    for (std::size_t j = 0; j < seen.size(); ++j) {
        if (!seen[j]) {
            throw validation_error("sample '" + matrix.sample_ids()[j] + "' has no class label");
        }
    }
    if (out.classes.size() < 2) {
        throw degenerate_labels_error("labels define " + std::to_string(out.classes.size()) +
                                      " class(es); at least 2 are required");
    }
    return out;
}

class_labels read_labels(const std::filesystem::path& path, const expression_matrix& matrix,
                         std::optional<char> delimiter) {
    auto in = open_or_throw(path);
    return parse_labels(in, matrix, delimiter);
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw error("format_double: conversion failed");
    return {buf.data(), ptr};
}

void write_matrix(std::ostream& out, const std::vector<std::string>& gene_ids,
                  const std::vector<std::string>& sample_ids, const dense_matrix& values,
                  char delimiter, const std::string& corner) {
    out << corner;
    for (const auto& s : sample_ids) out << delimiter << s;
    out << '\n';
    for (std::size_t i = 0; i < gene_ids.size(); ++i) {
        out << gene_ids[i];
        for (std::size_t j = 0; j < sample_ids.size(); ++j) out << delimiter << format_double(values(i, j));
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const expression_matrix& matrix, char delimiter) {
    write_matrix(out, matrix.gene_ids(), matrix.sample_ids(), matrix.values(), delimiter);
}

}  // namespace genecluster
