#ifndef GENECLUSTER_ERRORS_HPP
#define GENECLUSTER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genecluster {

// Root of every error the library throws. Callers that only need a message
// can catch this; the subclasses carry the structured detail.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed delimited text (ragged rows, missing header).
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A cell that is missing or not a finite number. Row is the 1-based gene
// (body row) and column the 1-based sample column.
class data_error : public error {
public:
    data_error(const std::string& what, std::size_t row, std::size_t column)
        : error(what), row_(row), column_(column) {}
    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

class validation_error : public error {
public:
    using error::error;
};

// Fewer than two class tags where a class variable is required.
class degenerate_labels_error : public error {
public:
    using error::error;
};

class invalid_distribution_error : public error {
public:
    using error::error;
};

class parameter_error : public error {
public:
    using error::error;
};

class shape_error : public error {
public:
    using error::error;
};

// Values outside the domain an operation requires, e.g. memberships not in [0,1].
class domain_error : public error {
public:
    using error::error;
};

// Validity indices undefined for the given clustering (empty cluster, k < 2).
class validity_error : public error {
public:
    using error::error;
};

// Coincident centroids make an index divide by zero.
class degenerate_clustering_error : public validity_error {
public:
    using validity_error::validity_error;
};

}  // namespace genecluster

#endif  // GENECLUSTER_ERRORS_HPP
