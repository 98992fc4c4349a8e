// genecluster: entropy-filtered gene clustering with K-means, rough K-means
// and fuzzy soft rough K-means, scored by the DB and Xie-Beni indices.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "genecluster/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Cluster gene expression data and compare K-means, rough K-means and fuzzy soft rough K-means"};

    std::string config_path;
    app.add_option("--config", config_path, "Flat key = value file; flags override its values");

    // Every setting is collected as text and handed to apply_setting, so the
    // config file and the flags share one parser.
    std::vector<std::pair<std::string, std::string>> flags = {
        {"matrix", "Expression matrix (genes as rows, tab or comma delimited)"},
        {"labels", "Sample class labels: sample_id<delim>class per line"},
        {"dataset", "Dataset tag used in reports (default: matrix file stem)"},
        {"top-genes", "Keep the N genes with highest information gain (0 keeps all)"},
        {"bins", "Equal-width bins per gene for information gain (0: ceil(log2 m) + 1)"},
        {"fuzzify", "Membership function for fsrk: s or z"},
        {"k", "Number of clusters"},
        {"w-lower", "Weight of the lower-approximation mean"},
        {"w-upper", "Weight of the boundary mean"},
        {"epsilon", "Distance-ratio threshold for rough k-means (>= 1)"},
        {"fsrk-epsilon", "Similarity-ratio threshold for fsrk, in (0, 1]"},
        {"max-iter", "Maximum iterations per run"},
        {"tol", "Convergence tolerance on centroid displacement"},
        {"seed", "Seed for centroid initialization"},
        {"restarts", "Runs per algorithm; the lowest DB index is kept"},
        {"out", "Output directory"},
        {"export-fuzzified", "Also write fuzzified.tsv (true/false)"},
    };
    std::vector<std::string> values(flags.size());
    std::vector<CLI::Option*> options;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        options.push_back(app.add_option("--" + flags[i].first, values[i], flags[i].second));
    }
    std::vector<std::string> algorithms;
    auto* algorithm_option = app.add_option("--algorithm", algorithms,
                                            "kmeans, rough or fsrk; repeatable (default: all three)");

    CLI11_PARSE(app, argc, argv);

    try {
        auto config = config_path.empty() ? genecluster::experiment_config{}
                                          : genecluster::load_config(config_path);
        for (std::size_t i = 0; i < flags.size(); ++i) {
            if (options[i]->count() > 0) genecluster::apply_setting(config, flags[i].first, values[i]);
        }
        if (algorithm_option->count() > 0) {
            config.algorithms_set = false;
            for (const auto& a : algorithms) genecluster::apply_setting(config, "algorithm", a);
        }

        const auto result = genecluster::run_experiment(config, &std::clog);
        std::vector<genecluster::validity_report> reports;
        for (const auto& run : result.runs) reports.push_back(run.report);
        genecluster::write_comparison_text(std::cout, genecluster::compare(reports));
    } catch (const genecluster::stage_error& e) {
        std::cerr << "genecluster: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "genecluster: [internal] " << e.what() << '\n';
        return 2;
    }
    return 0;
}
