#include "movegraph/export.hpp"

#include <ostream>

namespace movegraph {

std::string vertex_label(vertex_id v, const modulus& n, std::size_t m) {
    const auto x = decode(v, n, m);
    std::string out = "(";
    for (std::size_t i = 0; i < m; ++i) {
        if (i) out += ',';
        out += std::to_string(x[i]);
    }
    out += ')';
    return out;
}

void write_dot(std::ostream& out, const move_graph& g) {
    out << "digraph movegraph {\n";
    for (vertex_id v = 0; v < g.size(); ++v) {
        out << "  \"" << vertex_label(v, g.mod(), g.dim()) << "\" -> \""
            << vertex_label(g.successor(v), g.mod(), g.dim()) << "\";\n";
    }
    out << "}\n";
}

ordered_json spectrum_json(const spectrum& s) {
    auto out = ordered_json::object();
    for (const auto& [length, count] : s) out[std::to_string(length)] = count;
    return out;
}

ordered_json graph_json(const move_graph& g, const decomposition& d) {
    ordered_json out;
    out["n"] = g.mod().value();
    out["m"] = g.dim();
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        auto row = ordered_json::array();
        for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(g.matrix().at(i, j));
        rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
    out["successor"] = std::vector<vertex_id>(g.successor().begin(), g.successor().end());
    out["spectrum"] = spectrum_json(d.lengths);
    return out;
}

ordered_json level_partition_json(const level_partition& lp) {
    ordered_json out;
    out["r"] = lp.r;
    auto levels = ordered_json::array();
    for (const auto& level : lp.levels) levels.push_back(level);
    out["levels"] = std::move(levels);
    return out;
}

ordered_json tree_report_json(const tree_report& t) {
    ordered_json out;
    out["r"] = t.r;
    out["vertex_count"] = t.vertex_count;
    out["arc_count"] = t.arc_count;
    out["depth"] = t.depth;
    out["is_inverted_pbt"] = t.is_inverted_pbt;
    out["leaf_level_uniform"] = t.leaf_level_uniform;
    out["root_vertex"] = t.root_vertex;
    out["closing_arcs"] = ordered_json::array({ordered_json::array({t.closing_arc_root.first, t.closing_arc_root.second}),
                                               ordered_json::array({t.closing_arc_origin.first, t.closing_arc_origin.second})});
    out["closing_arcs_present"] = t.closing_arcs_present;
    out["depth_matches_power_formula"] = t.depth_matches_power_formula;
    return out;
}

ordered_json prediction_json(const prime_prediction& p) {
    ordered_json out;
    out["p"] = p.p;
    out["t"] = p.t;
    out["k"] = p.k;
    out["i_root"] = p.i_root ? ordered_json(*p.i_root) : ordered_json(nullptr);
    out["s"] = p.s;
    out["case_label"] = std::string(to_string(p.case_label));
    out["secondary_exists"] = p.secondary_exists;
    out["secondary_length"] = p.secondary_length ? ordered_json(*p.secondary_length) : ordered_json(nullptr);
    out["primary_count"] = p.primary_count;
    out["secondary_count"] = p.secondary_count ? ordered_json(*p.secondary_count) : ordered_json(nullptr);
    out["fixed_points"] = p.fixed_points;
    out["spectrum"] = spectrum_json(p.implied_spectrum());
    return out;
}

void write_survey_csv(std::ostream& out, const std::vector<survey_row>& rows) {
    // LF line endings; no field ever needs quoting.
    out << kSurveyCsvHeader << '\n';
    for (const auto& row : rows) {
        const auto& p = row.prediction;
        out << p.p << ',' << row.p_mod_8 << ',' << p.t << ',' << p.k << ',' << p.s << ','
            << (p.secondary_exists ? "true" : "false") << ',';
        if (p.secondary_length) out << *p.secondary_length;
        out << ',';
        if (p.secondary_count) out << *p.secondary_count;
        out << ',' << p.primary_count << '\n';
    }
}

}  // namespace movegraph
