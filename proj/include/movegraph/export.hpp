#pragma once

// Serialization. JSON documents use insertion-ordered keys so the same input
// always produces the same bytes.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "movegraph/graph.hpp"
#include "movegraph/predictor.hpp"
#include "movegraph/subadd.hpp"

namespace movegraph {

using ordered_json = nlohmann::ordered_json;

/// "(x1,...,xm)"
std::string vertex_label(vertex_id v, const modulus& n, std::size_t m);

/// One `"(x)" -> "(y)";` line per arc.
void write_dot(std::ostream& out, const move_graph& g);

ordered_json spectrum_json(const spectrum& s);
/// {n, m, matrix, successor[], spectrum{}}
ordered_json graph_json(const move_graph& g, const decomposition& d);
ordered_json level_partition_json(const level_partition& lp);
ordered_json tree_report_json(const tree_report& t);
ordered_json prediction_json(const prime_prediction& p);

inline constexpr const char* kSurveyCsvHeader =
    "p,p_mod_8,t,k,s,secondary_exists,secondary_length,secondary_count,primary_count";

void write_survey_csv(std::ostream& out, const std::vector<survey_row>& rows);

}  // namespace movegraph
