#include "movegraph/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "movegraph/errors.hpp"
#include "movegraph/export.hpp"
#include "movegraph/predictor.hpp"
#include "movegraph/subadd.hpp"
#include "movegraph/verify.hpp"

namespace movegraph::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

template <class T>
const T& require(const std::optional<T>& value, const char* flag) {
    if (!value) throw usage_error(std::string("missing required option ") + flag);
    return *value;
}

format pick_format(const run_config& config, format fallback) { return config.output_format.value_or(fallback); }

void write_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

void print_spectrum_table(std::ostream& out, const spectrum& s) {
    out << std::setw(12) << "length" << std::setw(12) << "cycles" << '\n';
    for (const auto& [length, count] : s) out << std::setw(12) << length << std::setw(12) << count << '\n';
}

int do_build(const run_config& config, std::ostream& out) {
    const auto mat = resolve_matrix(config).reduce(modulus(require(config.n, "--n")));
    const auto g = build(mat, effective_budget(config));
    switch (pick_format(config, format::json)) {
    case format::dot: write_dot(out, g); break;
    case format::json: write_json(out, graph_json(g, decompose(g))); break;
    case format::text:
        for (vertex_id v = 0; v < g.size(); ++v) {
            out << vertex_label(v, g.mod(), g.dim()) << " -> " << vertex_label(g.successor(v), g.mod(), g.dim()) << '\n';
        }
        break;
    case format::csv: throw usage_error("build supports json, dot, text");
    }
    return exit_code::ok;
}

int do_analyze(const run_config& config, std::ostream& out) {
    const auto mat = resolve_matrix(config).reduce(modulus(require(config.n, "--n")));
    const auto g = build(mat, effective_budget(config));
    const auto d = decompose(g);
    const auto order = zn_order(mat);
    switch (pick_format(config, format::json)) {
    case format::json: {
        ordered_json doc;
        doc["n"] = g.mod().value();
        doc["m"] = g.dim();
        doc["spectrum"] = spectrum_json(d.lengths);
        doc["components"] = d.cycles.size();
        doc["tail_vertices"] = d.tail_vertex_count();
        doc["zn_order"] = order ? ordered_json(*order) : ordered_json(nullptr);
        write_json(out, doc);
        break;
    }
    case format::text:
        print_spectrum_table(out, d.lengths);
        out << "components: " << d.cycles.size() << '\n';
        out << "tail vertices: " << d.tail_vertex_count() << '\n';
        out << "Z_n-order: " << (order ? std::to_string(*order) : std::string("none")) << '\n';
        break;
    default: throw usage_error("analyze supports json, text");
    }
    return exit_code::ok;
}

int do_levels(const run_config& config, std::ostream& out) {
    const auto r = require(config.r, "--r");
    const auto budget = effective_budget(config);
    const auto lp = make_level_partition(r, budget);
    const auto arcs = check_level_arcs(r, budget);
    const auto tree = make_tree_report(r, budget);
    switch (pick_format(config, format::json)) {
    case format::json: {
        ordered_json doc;
        doc["partition"] = level_partition_json(lp);
        doc["tree"] = tree_report_json(tree);
        doc["level_arcs_ok"] = arcs.ok();
        write_json(out, doc);
        break;
    }
    case format::text:
        for (std::size_t i = 0; i < lp.levels.size(); ++i) out << "P_" << i << ": " << lp.levels[i].size() << '\n';
        out << "level arcs: " << (arcs.ok() ? "ok" : "FAILED") << '\n';
        out << "inverted perfect binary tree: " << (tree.is_inverted_pbt ? "yes" : "no") << ", depth " << tree.depth
            << '\n';
        break;
    default: throw usage_error("levels supports json, text");
    }
    return arcs.ok() && tree.is_inverted_pbt ? exit_code::ok : exit_code::verification;
}

int do_predict(const run_config& config, std::ostream& out) {
    const auto p = require(config.p, "--p");
    const auto prediction = predict(p);
    auto doc = prediction_json(prediction);
    doc["mod8_criterion"] = std::string(to_string(mod8_criterion(p)));
    switch (pick_format(config, format::json)) {
    case format::json: write_json(out, doc); break;
    case format::text:
        out << "p=" << p << " t=" << prediction.t << " k=" << prediction.k << " s=" << prediction.s
            << " case=" << to_string(prediction.case_label) << '\n';
        print_spectrum_table(out, prediction.implied_spectrum());
        break;
    default: throw usage_error("predict supports json, text");
    }
    return exit_code::ok;
}

int do_verify(const run_config& config, std::ostream& out) {
    suite_params params;
    params.n_max = config.n_max;
    params.p_max = config.p_max;
    params.r_max = config.r_max;
    params.budget = effective_budget(config);
    bool passed = false;
    const auto report = run_suites(config.suites, params, passed);
    switch (pick_format(config, format::json)) {
    case format::json: write_json(out, report); break;
    case format::text:
        for (const auto& suite : report["suites"]) {
            out << (suite["passed"].get<bool>() ? "PASS " : "FAIL ") << suite["name"].get<std::string>() << " ("
                << suite["cases"].get<std::uint64_t>() << " cases)\n";
            for (const auto& f : suite["failures"]) out << "  " << f.get<std::string>() << '\n';
        }
        break;
    default: throw usage_error("verify supports json, text");
    }
    return passed ? exit_code::ok : exit_code::verification;
}

int do_survey(const run_config& config, std::ostream& out) {
    const auto rows = survey(config.p_max);
    switch (pick_format(config, format::csv)) {
    case format::csv: write_survey_csv(out, rows); break;
    case format::json: {
        auto doc = ordered_json::array();
        for (const auto& row : rows) {
            auto entry = prediction_json(row.prediction);
            entry["p_mod_8"] = row.p_mod_8;
            entry["mod8_criterion"] = std::string(to_string(row.criterion));
            doc.push_back(std::move(entry));
        }
        write_json(out, doc);
        break;
    }
    default: throw usage_error("survey supports csv, json");
    }
    return exit_code::ok;
}

int do_oeis(const run_config& config, std::ostream& out) {
    for (auto term : oeis_terms(config.n_max, effective_budget(config))) out << term << '\n';
    return exit_code::ok;
}

int dispatch(const run_config& config, std::ostream& out) {
    switch (config.cmd) {
    case command::build: return do_build(config, out);
    case command::analyze: return do_analyze(config, out);
    case command::levels: return do_levels(config, out);
    case command::predict: return do_predict(config, out);
    case command::verify: return do_verify(config, out);
    case command::survey: return do_survey(config, out);
    case command::oeis: return do_oeis(config, out);
    }
    throw usage_error("unknown command");
}

}  // namespace

int_matrix parse_matrix(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row_text : split(text, ';')) {
        std::vector<std::int64_t> row;
        for (const auto& cell : split(row_text, ',')) {
            const auto token = trim(cell);
            std::int64_t value = 0;
            const auto* end = token.data() + token.size();
            const auto [ptr, ec] = std::from_chars(token.data(), end, value);
            if (token.empty() || ec != std::errc() || ptr != end) {
                throw usage_error("malformed matrix entry '" + token + "' in '" + text + "'");
            }
            row.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw usage_error("empty matrix");
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw usage_error("matrix '" + text + "' is not square");
    }
    return int_matrix::from_rows(rows);
}

int_matrix resolve_matrix(const run_config& config) {
    const bool has_inline = !config.matrix_spec.empty();
    const bool has_preset = !config.preset.empty();
    if (has_inline == has_preset) throw usage_error("give exactly one of --matrix or --preset");
    if (has_inline) return parse_matrix(config.matrix_spec);
    if (config.preset == "subadd") return subadd_integer_matrix();
    if (config.preset == "perm3") return perm3_matrix();
    throw usage_error("unknown preset '" + config.preset + "' (expected subadd or perm3)");
}

std::uint64_t effective_budget(const run_config& config) {
    if (const char* env = std::getenv("MOVEGRAPH_BUDGET"); env != nullptr && *env != '\0') {
        std::uint64_t value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
            throw usage_error("MOVEGRAPH_BUDGET must be a positive integer");
        }
        return value;
    }
    return config.size_budget;
}

int run(const run_config& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.output_path) {
            std::ostringstream buffer;
            const int status = dispatch(config, buffer);
            std::ofstream file(*config.output_path, std::ios::binary);
            if (!file) throw usage_error("cannot open output file " + *config.output_path);
            file << buffer.str();
            return status;
        }
        return dispatch(config, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << '\n';
        return exit_code::capacity;
    } catch (const invariant_error& e) {
        err << "invariant violated: " << e.what() << '\n';
        return exit_code::verification;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::domain;
    }
}

}  // namespace movegraph::cli
