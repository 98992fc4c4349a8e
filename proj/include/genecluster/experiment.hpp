#ifndef GENECLUSTER_EXPERIMENT_HPP
#define GENECLUSTER_EXPERIMENT_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "genecluster/clustering.hpp"
#include "genecluster/errors.hpp"
#include "genecluster/fuzzysoft.hpp"
#include "genecluster/validity.hpp"

namespace genecluster {

// Canonical order; ties in comparisons resolve to the earlier entry.
enum class algorithm { kmeans = 0, rough = 1, fsrk = 2 };

algorithm parse_algorithm(std::string_view text);
std::string_view to_string(algorithm a);

/// An error raised while running the pipeline, tagged with the stage that
/// failed (config, ingest, filter, fuzzify, cluster, validate, output).
class stage_error : public error {
public:
    stage_error(std::string stage, const std::string& what)
        : error("[" + stage + "] " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

struct experiment_config {
    std::filesystem::path matrix_path;
    std::filesystem::path labels_path;  // empty: no filtering
    std::string dataset;                // defaults to the matrix file stem
    std::size_t top_genes = 0;          // 0 keeps every gene
    std::size_t bins = 0;               // 0 picks Sturges' rule
    membership_kind fuzzify = membership_kind::s_shaped;
    std::vector<algorithm> algorithms{algorithm::kmeans, algorithm::rough, algorithm::fsrk};
    std::array<rough_params, 3> params = default_params();
    std::filesystem::path out_dir = "out";
    std::size_t restarts = 1;
    bool export_fuzzified = false;
    bool algorithms_set = false;  // an `algorithm` setting replaced the defaults

    rough_params& params_for(algorithm a) { return params[static_cast<std::size_t>(a)]; }
    const rough_params& params_for(algorithm a) const { return params[static_cast<std::size_t>(a)]; }

    static std::array<rough_params, 3> default_params();
};

/**
 * Applies one setting by name. Names match the CLI flags without the leading
 * dashes; '_' and '-' are interchangeable. Shared settings (k, w-lower,
 * w-upper, max-iter, tol, seed) apply to every algorithm, `epsilon` to rough
 * k-means and `fsrk-epsilon` to fuzzy soft rough k-means. `algorithm` accepts
 * a comma-separated list; the first such setting replaces the default list
 * and later ones append to it.
 */
void apply_setting(experiment_config& config, std::string_view key, std::string_view value);

/// Flat "key = value" file; '#' starts a comment. Repeated `algorithm`
/// lines accumulate. Relative matrix and labels paths resolve against the
/// file's directory.
experiment_config load_config(const std::filesystem::path& path);

/// Checks paths and parameter ranges that do not depend on the data.
/// Throws stage_error tagged "config".
void validate_config(const experiment_config& config);

struct algorithm_run {
    validity_report report;
    std::vector<std::size_t> crisp;   // crisp cluster per gene
    rough_approximation approximation;  // kmeans: lower == upper == crisp
    std::size_t restart = 0;
};

struct experiment_result {
    std::vector<std::string> gene_ids;  // genes that were clustered
    std::size_t samples = 0;
    std::vector<algorithm_run> runs;    // one per requested algorithm, config order
};

/// ingest -> filter -> fuzzify (only when fsrk is requested) -> cluster ->
/// validate, then writes report.csv, report.json, assignments-<alg>.csv and,
/// with labels, ranking.csv into out_dir. Each file is written to a temporary
/// name and renamed into place. Stage progress goes to `log` when given.
experiment_result run_experiment(const experiment_config& config, std::ostream* log = nullptr);

struct comparison_row {
    validity_report report;
    bool best = false;  // lowest DB index within its dataset
};

/// Sorts rows by dataset, then DB ascending (ties in canonical algorithm
/// order), and flags the DB-minimal row of each dataset.
std::vector<comparison_row> compare(const std::vector<validity_report>& rows);

void write_comparison_csv(std::ostream& out, const std::vector<comparison_row>& rows);
void write_comparison_text(std::ostream& out, const std::vector<comparison_row>& rows);
void write_report_json(std::ostream& out, const experiment_result& result);
void write_assignments_csv(std::ostream& out, const std::vector<std::string>& gene_ids,
                           const algorithm_run& run);

}  // namespace genecluster

#endif  // GENECLUSTER_EXPERIMENT_HPP
