#pragma once

#include "equidiv/colorful.hpp"
#include "equidiv/division.hpp"
#include "equidiv/group.hpp"
#include "equidiv/measures.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace equidiv {

using Json = nlohmann::ordered_json;

/// Reads a whole file; InputError when it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Parses JSON text, turning syntax errors into InputError tagged with `what`.
Json parse_json(const std::string& text, const std::string& what);

/// Top-level list of {"breakpoints": [...], "densities": [...]} records.
/// Diagnostics name the offending measure index.
std::vector<Measure> parse_measures(const Json& doc);

Json measures_to_json(const std::vector<Measure>& measures);

struct ResultRecord {
    PartitionScheme scheme;
    ValuesTable values;
    Rational epsilon;
    Rational max_deviation;
    bool exact = false;
};

Json division_to_json(const DivisionOutcome& outcome);
ResultRecord parse_result(const Json& doc);

/// Deterministic text form of a document (two-space indent, trailing newline).
std::string dump(const Json& doc);

/// {"d": int, "m": int, "columns": [[[rat, ...], ...], ...]}
ColorfulInstance parse_instance(const Json& doc);

/// {"kind": "cyclic", "order": k} or {"kind": "elementary_abelian", "p": p, "r": r}
Group parse_group(const Json& doc);
Json group_to_json(const Group& group);

/// {"group": ..., "N": int, "depth": int, "labels": [[g, i], ...]} with
/// labels in vertex id order of the depth-fold subdivision of E_N G.
struct ComplexInput {
    Group group;
    int N = 0;
    int depth = 0;
    int n = 1;
    std::vector<CrossLabel> labels;
};
ComplexInput parse_complex_input(const Json& doc);

}  // namespace equidiv
