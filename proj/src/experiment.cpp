#include "genecluster/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "genecluster/errors.hpp"
#include "genecluster/genefilter.hpp"
#include "genecluster/ingest.hpp"

namespace genecluster {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string normalize_key(std::string_view key) {
    std::string out(trim(key));
    while (!out.empty() && out.front() == '-') out.erase(0, 1);
    std::replace(out.begin(), out.end(), '_', '-');
    return out;
}

std::size_t to_size(std::string_view key, std::string_view value) {
    std::size_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw stage_error("config", "setting '" + std::string(key) + "' expects a non-negative integer, got '" +
                                        std::string(value) + "'");
    }
    return out;
}

double to_real(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw stage_error("config", "setting '" + std::string(key) + "' expects a number, got '" +
                                        std::string(value) + "'");
    }
    return out;
}

bool to_bool(std::string_view key, std::string_view value) {
    if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
    if (value == "0" || value == "false" || value == "no" || value == "off") return false;
    throw stage_error("config", "setting '" + std::string(key) + "' expects true or false");
}

template <typename Fn>
void for_each_params(experiment_config& config, Fn fn) {
    for (auto& p : config.params) fn(p);
}

template <typename Fn>
auto in_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const stage_error&) {
        throw;
    } catch (const std::exception& e) {
        throw stage_error(stage, e.what());
    }
}

void log_line(std::ostream* log, std::string_view stage, const std::string& message) {
    if (log) *log << '[' << stage << "] " << message << '\n';
}

// Writes through a temporary sibling and renames it over the target, so a
// failed write leaves no file behind.
template <typename Writer>
void write_atomically(const std::filesystem::path& target, Writer writer) {
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw stage_error("output", "cannot create '" + tmp.string() + "'");
        writer(out);
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw stage_error("output", "failed writing '" + tmp.string() + "'");
        }
    }
    std::filesystem::rename(tmp, target);
}

struct candidate {
    std::vector<std::size_t> crisp;
    rough_approximation approximation;
    dense_matrix centroids;
    std::size_t iterations = 0;
    bool converged = false;
    rough_params params;
};

candidate run_once(algorithm a, const dense_matrix& raw, const dense_matrix& fuzzy,
                   const rough_params& params) {
    candidate c;
    c.params = params;
    switch (a) {
        case algorithm::kmeans: {
            auto km = kmeans(raw, params);
            c.crisp = km.assignment;
            c.approximation.lower.resize(params.k);
            c.approximation.upper.resize(params.k);
            for (std::size_t i = 0; i < km.assignment.size(); ++i) {
                c.approximation.lower[km.assignment[i]].push_back(i);
                c.approximation.upper[km.assignment[i]].push_back(i);
            }
            c.centroids = std::move(km.centroids);
            c.iterations = km.iterations;
            c.converged = km.converged;
            break;
        }
        case algorithm::rough:
        case algorithm::fsrk: {
            const bool fs = a == algorithm::fsrk;
            auto rc = fs ? fsrk_kmeans(fuzzy, params) : rough_kmeans(raw, params);
            c.crisp = crispify(rc, fs ? fuzzy : raw, fs ? proximity::similarity : proximity::distance);
            c.centroids = rc.centroids;
            c.iterations = rc.iterations;
            c.converged = rc.converged;
            c.approximation = std::move(rc);
            break;
        }
    }
    return c;
}

std::string format_param(double v) { return format_double(v); }

}  // namespace

algorithm parse_algorithm(std::string_view text) {
    const auto t = trim(text);
    if (t == "kmeans") return algorithm::kmeans;
    if (t == "rough") return algorithm::rough;
    if (t == "fsrk") return algorithm::fsrk;
    throw parameter_error("unknown algorithm '" + std::string(t) + "' (expected kmeans, rough or fsrk)");
}

std::string_view to_string(algorithm a) {
    switch (a) {
        case algorithm::kmeans: return "kmeans";
        case algorithm::rough: return "rough";
        case algorithm::fsrk: return "fsrk";
    }
    return "?";
}

std::array<rough_params, 3> experiment_config::default_params() {
    std::array<rough_params, 3> p{};
    p[static_cast<std::size_t>(algorithm::rough)].epsilon = default_rough_epsilon;
    p[static_cast<std::size_t>(algorithm::fsrk)].epsilon = default_fsrk_epsilon;
    return p;
}

void apply_setting(experiment_config& config, std::string_view raw_key, std::string_view raw_value) {
    const auto key = normalize_key(raw_key);
    const auto value = trim(raw_value);
    if (key == "matrix") {
        config.matrix_path = std::string(value);
    } else if (key == "labels") {
        config.labels_path = std::string(value);
    } else if (key == "dataset") {
        config.dataset = std::string(value);
    } else if (key == "top-genes") {
        config.top_genes = to_size(key, value);
    } else if (key == "bins") {
        config.bins = to_size(key, value);
    } else if (key == "fuzzify") {
        try {
            config.fuzzify = parse_membership_kind(value);
        } catch (const error& e) {
            throw stage_error("config", e.what());
        }
    } else if (key == "algorithm") {
        if (!config.algorithms_set) config.algorithms.clear();
        config.algorithms_set = true;
        std::string_view rest = value;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = trim(rest.substr(0, comma));
            if (!item.empty()) {
                try {
                    config.algorithms.push_back(parse_algorithm(item));
                } catch (const error& e) {
                    throw stage_error("config", e.what());
                }
            }
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    } else if (key == "k") {
        const auto k = to_size(key, value);
        for_each_params(config, [&](rough_params& p) { p.k = k; });
    } else if (key == "w-lower") {
        const auto w = to_real(key, value);
        for_each_params(config, [&](rough_params& p) { p.w_lower = w; });
    } else if (key == "w-upper") {
        const auto w = to_real(key, value);
        for_each_params(config, [&](rough_params& p) { p.w_upper = w; });
    } else if (key == "epsilon") {
        config.params_for(algorithm::rough).epsilon = to_real(key, value);
    } else if (key == "fsrk-epsilon") {
        config.params_for(algorithm::fsrk).epsilon = to_real(key, value);
    } else if (key == "max-iter") {
        const auto it = to_size(key, value);
        for_each_params(config, [&](rough_params& p) { p.max_iter = it; });
    } else if (key == "tol") {
        const auto tol = to_real(key, value);
        for_each_params(config, [&](rough_params& p) { p.tol = tol; });
    } else if (key == "seed") {
        const auto seed = to_size(key, value);
        for_each_params(config, [&](rough_params& p) { p.seed = seed; });
    } else if (key == "restarts") {
        config.restarts = to_size(key, value);
    } else if (key == "out") {
        config.out_dir = std::string(value);
    } else if (key == "export-fuzzified") {
        config.export_fuzzified = to_bool(key, value);
    } else {
        throw stage_error("config", "unknown setting '" + std::string(raw_key) + "'");
    }
}

experiment_config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw stage_error("config", "cannot open config file '" + path.string() + "'");
    experiment_config config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = std::string_view(line);
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw stage_error("config", path.string() + ":" + std::to_string(line_no) +
                                            ": expected 'key = value'");
        }
        apply_setting(config, text.substr(0, eq), text.substr(eq + 1));
    }
    // Input paths in a config file are relative to the file itself.
    const auto base = path.parent_path();
    for (auto* p : {&config.matrix_path, &config.labels_path}) {
        if (!p->empty() && p->is_relative()) *p = base / *p;
    }
    return config;
}

void validate_config(const experiment_config& config) {
    namespace fs = std::filesystem;
    if (config.matrix_path.empty()) throw stage_error("config", "no expression matrix given");
    if (!fs::is_regular_file(config.matrix_path)) {
        throw stage_error("config", "expression matrix '" + config.matrix_path.string() + "' does not exist");
    }
    if (!config.labels_path.empty() && !fs::is_regular_file(config.labels_path)) {
        throw stage_error("config", "labels file '" + config.labels_path.string() + "' does not exist");
    }
    if (config.top_genes > 0 && config.labels_path.empty()) {
        throw stage_error("config", "top-genes needs a labels file");
    }
    if (config.algorithms.empty()) throw stage_error("config", "no algorithm requested");
    if (config.restarts < 1) throw stage_error("config", "restarts must be at least 1");
    if (config.out_dir.empty()) throw stage_error("config", "no output directory given");
    // Data-independent checks; k against the gene count happens once the data is loaded.
    for (auto a : config.algorithms) {
        const auto& p = config.params_for(a);
        try {
            switch (a) {
                case algorithm::kmeans: validate_kmeans_params(p, p.k); break;
                case algorithm::rough: validate_rough_params(p, p.k); break;
                case algorithm::fsrk: validate_fsrk_params(p, p.k); break;
            }
        } catch (const error& e) {
            throw stage_error("config", std::string(to_string(a)) + ": " + e.what());
        }
    }
}

experiment_result run_experiment(const experiment_config& config, std::ostream* log) {
    validate_config(config);
    const std::string dataset =
        config.dataset.empty() ? config.matrix_path.stem().string() : config.dataset;

    auto matrix = in_stage("ingest", [&] { return read_matrix(config.matrix_path); });
    log_line(log, "ingest", dataset + ": " + std::to_string(matrix.genes()) + " genes x " +
                                std::to_string(matrix.samples()) + " samples");

    std::optional<gene_selection> selection;
    if (!config.labels_path.empty()) {
        selection = in_stage("filter", [&] {
            const auto labels = read_labels(config.labels_path, matrix);
            const discretization_spec spec{config.bins > 0 ? config.bins
                                                           : default_bin_count(matrix.samples())};
            const std::size_t top = config.top_genes > 0 ? config.top_genes : matrix.genes();
            return rank_and_select(matrix, labels, spec, top);
        });
        log_line(log, "filter", "kept " + std::to_string(selection->filtered.genes()) + " of " +
                                    std::to_string(matrix.genes()) + " genes by information gain");
    } else {
        log_line(log, "filter", "no labels given; keeping all " + std::to_string(matrix.genes()) + " genes");
    }
    const expression_matrix& data = selection ? selection->filtered : matrix;

    const bool wants_fsrk = std::find(config.algorithms.begin(), config.algorithms.end(),
                                      algorithm::fsrk) != config.algorithms.end();
    membership_matrix fuzzy;
    if (wants_fsrk) {
        fuzzy = in_stage("fuzzify", [&] { return fuzzify(data, config.fuzzify); });
        log_line(log, "fuzzify", std::string(to_string(config.fuzzify)) + "-shaped memberships, per sample column");
    }

    std::vector<std::vector<candidate>> candidates;
    for (auto a : config.algorithms) {
        candidates.push_back(in_stage("cluster", [&] {
            std::vector<candidate> runs;
            for (std::size_t r = 0; r < config.restarts; ++r) {
                auto params = config.params_for(a);
                params.seed += r;
                runs.push_back(run_once(a, data.values(), fuzzy.values(), params));
            }
            return runs;
        }));
        log_line(log, "cluster", std::string(to_string(a)) + ": " + std::to_string(config.restarts) +
                                     " run(s) with k=" + std::to_string(config.params_for(a).k));
    }

    experiment_result result;
    result.gene_ids = data.gene_ids();
    result.samples = data.samples();
    for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
        const auto a = config.algorithms[ai];
        result.runs.push_back(in_stage("validate", [&] {
            const auto& points = a == algorithm::fsrk ? fuzzy.values() : data.values();
            std::optional<algorithm_run> best;
            std::string last_failure;
            for (std::size_t r = 0; r < candidates[ai].size(); ++r) {
                auto& c = candidates[ai][r];
                double db = 0.0;
                try {
                    db = db_index(points, c.crisp, c.centroids);
                } catch (const validity_error& e) {
                    last_failure = e.what();
                    continue;
                }
                if (best && !(db < best->report.db_index)) continue;
                algorithm_run run;
                run.report.dataset = dataset;
                run.report.algorithm = std::string(to_string(a));
                run.report.db_index = db;
                run.report.xb_index = xb_index(points, c.crisp, c.centroids);
                run.report.sse = sum_squared_error(points, c.crisp, c.centroids);
                run.report.iterations = c.iterations;
                run.report.converged = c.converged;
                run.report.params = c.params;
                run.crisp = c.crisp;
                run.approximation = c.approximation;
                run.restart = r;
                best = std::move(run);
            }
            if (!best) {
                throw stage_error("validate", std::string(to_string(a)) +
                                                  ": no run produced a scoreable clustering (" +
                                                  last_failure + ")");
            }
            return std::move(*best);
        }));
        const auto& rep = result.runs.back().report;
        log_line(log, "validate", rep.algorithm + ": db=" + format_double(rep.db_index) +
                                      " xb=" + format_double(rep.xb_index) +
                                      " iterations=" + std::to_string(rep.iterations));
    }

    in_stage("output", [&] {
        std::filesystem::create_directories(config.out_dir);
        if (selection) {
            write_atomically(config.out_dir / "ranking.csv",
                             [&](std::ostream& out) { write_ranking(out, matrix, selection->ranking); });
        }
        if (wants_fsrk && config.export_fuzzified) {
            write_atomically(config.out_dir / "fuzzified.tsv", [&](std::ostream& out) {
                write_matrix(out, fuzzy.gene_ids(), fuzzy.sample_ids(), fuzzy.values());
            });
        }
        for (const auto& run : result.runs) {
            write_atomically(config.out_dir / ("assignments-" + run.report.algorithm + ".csv"),
                             [&](std::ostream& out) { write_assignments_csv(out, result.gene_ids, run); });
        }
        std::vector<validity_report> reports;
        for (const auto& run : result.runs) reports.push_back(run.report);
        const auto table = compare(reports);
        write_atomically(config.out_dir / "report.csv",
                         [&](std::ostream& out) { write_comparison_csv(out, table); });
        write_atomically(config.out_dir / "report.json",
                         [&](std::ostream& out) { write_report_json(out, result); });
    });
    log_line(log, "output", "wrote results to " + config.out_dir.string());
    return result;
}

std::vector<comparison_row> compare(const std::vector<validity_report>& rows) {
    std::vector<comparison_row> out;
    for (const auto& r : rows) out.push_back({r, false});
    const auto rank = [](const std::string& name) {
        try {
            return static_cast<int>(parse_algorithm(name));
        } catch (const error&) {
            return 3;
        }
    };
    std::stable_sort(out.begin(), out.end(), [&](const comparison_row& a, const comparison_row& b) {
        if (a.report.dataset != b.report.dataset) return a.report.dataset < b.report.dataset;
        if (a.report.db_index != b.report.db_index) return a.report.db_index < b.report.db_index;
        return rank(a.report.algorithm) < rank(b.report.algorithm);
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].best = i == 0 || out[i].report.dataset != out[i - 1].report.dataset;
    }
    return out;
}

void write_comparison_csv(std::ostream& out, const std::vector<comparison_row>& rows) {
    out << "dataset,algorithm,db,xb,sse,iterations,converged,best,k,w_lower,w_upper,epsilon,max_iter,tol,seed\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        const auto& p = r.params;
        const bool rough_family = r.algorithm != "kmeans";
        out << r.dataset << ',' << r.algorithm << ',' << format_double(r.db_index) << ','
            << format_double(r.xb_index) << ',' << format_double(r.sse) << ',' << r.iterations << ','
            << (r.converged ? "true" : "false") << ',' << (row.best ? "true" : "false") << ',' << p.k
            << ',' << (rough_family ? format_param(p.w_lower) : "") << ','
            << (rough_family ? format_param(p.w_upper) : "") << ','
            << (rough_family ? format_param(p.epsilon) : "") << ',' << p.max_iter << ','
            << format_param(p.tol) << ',' << p.seed << '\n';
    }
}

void write_comparison_text(std::ostream& out, const std::vector<comparison_row>& rows) {
    out << std::left << std::setw(16) << "Dataset" << std::setw(10) << "Algorithm" << std::right
        << std::setw(12) << "DB Index" << std::setw(12) << "XB Index" << std::setw(18) << "SSE"
        << std::setw(12) << "Iterations" << "\n";
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out << std::fixed << std::setprecision(4);
    for (const auto& row : rows) {
        const auto& r = row.report;
        out << std::left << std::setw(16) << r.dataset << std::setw(10) << r.algorithm << std::right
            << std::setw(12) << r.db_index << std::setw(12) << r.xb_index << std::setw(18) << r.sse
            << std::setw(12) << r.iterations << (row.best ? "  *best" : "") << "\n";
    }
    out.flags(old_flags);
    out.precision(old_precision);
}

void write_report_json(std::ostream& out, const experiment_result& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& run : result.runs) {
        const auto& r = run.report;
        const auto& p = r.params;
        rows.push_back({
            {"dataset", r.dataset},
            {"algorithm", r.algorithm},
            {"db", r.db_index},
            {"xb", r.xb_index},
            {"sse", r.sse},
            {"iterations", r.iterations},
            {"converged", r.converged},
            {"restart", run.restart},
            {"params",
             {{"k", p.k},
              {"w_lower", p.w_lower},
              {"w_upper", p.w_upper},
              {"epsilon", p.epsilon},
              {"max_iter", p.max_iter},
              {"tol", p.tol},
              {"seed", p.seed}}},
        });
    }
    const nlohmann::json doc{{"genes", result.gene_ids.size()}, {"samples", result.samples}, {"rows", rows}};
    out << doc.dump(2) << '\n';
}

void write_assignments_csv(std::ostream& out, const std::vector<std::string>& gene_ids,
                           const algorithm_run& run) {
    const auto& approx = run.approximation;
    std::vector<std::vector<std::pair<std::size_t, bool>>> per_gene(gene_ids.size());
    for (std::size_t h = 0; h < approx.k(); ++h) {
        for (auto i : approx.upper[h]) {
            const bool certain = std::binary_search(approx.lower[h].begin(), approx.lower[h].end(), i);
            per_gene[i].emplace_back(h, certain);
        }
    }
    out << "gene_id,cluster,membership_kind\n";
    for (std::size_t i = 0; i < gene_ids.size(); ++i) {
        for (const auto& [h, certain] : per_gene[i]) {
            out << gene_ids[i] << ',' << h << ',' << (certain ? "lower" : "boundary") << '\n';
        }
    }
}

}  // namespace genecluster
