#include "equidiv/io.hpp"

#include "equidiv/error.hpp"

#include <fstream>
#include <sstream>

namespace equidiv {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("failed writing " + path);
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(what + ": " + e.what());
    }
}

namespace {

Rational rational_field(const Json& value, const std::string& where) {
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw InputError(where + ": expected a rational string");
}

int int_field(const Json& doc, const char* key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer()) {
        throw InputError(where + ": missing integer field \"" + key + "\"");
    }
    return doc[key].get<int>();
}

const Json& array_field(const Json& doc, const char* key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
        throw InputError(where + ": missing list field \"" + key + "\"");
    }
    return doc[key];
}

std::vector<Rational> rational_list(const Json& list, const std::string& where) {
    if (!list.is_array()) throw InputError(where + ": expected a list");
    std::vector<Rational> out;
    for (std::size_t s = 0; s < list.size(); ++s) {
        out.push_back(rational_field(list[s], where + "[" + std::to_string(s) + "]"));
    }
    return out;
}

Json rational_strings(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace

std::vector<Measure> parse_measures(const Json& doc) {
    if (!doc.is_array() || doc.empty()) throw InputError("measures: expected a nonempty list");
    std::vector<Measure> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string where = "measure " + std::to_string(i);
        const auto breaks = rational_list(array_field(doc[i], "breakpoints", where), where + " breakpoints");
        const auto dens = rational_list(array_field(doc[i], "densities", where), where + " densities");
        try {
            out.emplace_back(breaks, dens);
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    return out;
}

Json measures_to_json(const std::vector<Measure>& measures) {
    Json out = Json::array();
    for (const auto& mu : measures) {
        Json record;
        record["breakpoints"] = rational_strings(mu.breakpoints());
        record["densities"] = rational_strings(mu.densities());
        out.push_back(std::move(record));
    }
    return out;
}

Json division_to_json(const DivisionOutcome& outcome) {
    Json doc;
    doc["k"] = outcome.scheme.k;
    doc["cuts"] = rational_strings(outcome.scheme.cuts);
    doc["assignment"] = outcome.scheme.assignment;
    Json values = Json::array();
    for (int i = 0; i < outcome.values.n; ++i) {
        std::vector<Rational> row(outcome.values.entries.begin() + i * outcome.values.k,
                                  outcome.values.entries.begin() + (i + 1) * outcome.values.k);
        values.push_back(rational_strings(row));
    }
    doc["values"] = std::move(values);
    doc["epsilon"] = to_string(outcome.certificate.epsilon);
    doc["certificate"] = Json{{"max_deviation", to_string(outcome.certificate.max_deviation)},
                              {"exact", outcome.certificate.exact}};
    return doc;
}

ResultRecord parse_result(const Json& doc) {
    const std::string where = "result";
    ResultRecord out;
    out.scheme.k = int_field(doc, "k", where);
    out.scheme.cuts = rational_list(array_field(doc, "cuts", where), "result cuts");
    for (const auto& g : array_field(doc, "assignment", where)) {
        if (!g.is_number_integer()) throw InputError("result assignment: expected integers");
        out.scheme.assignment.push_back(g.get<int>());
    }
    validate_scheme(out.scheme);
    const Json& values = array_field(doc, "values", where);
    out.values.n = static_cast<int>(values.size());
    out.values.k = out.scheme.k;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto row = rational_list(values[i], "result values[" + std::to_string(i) + "]");
        out.values.entries.insert(out.values.entries.end(), row.begin(), row.end());
    }
    if (doc.contains("epsilon")) out.epsilon = rational_field(doc["epsilon"], "result epsilon");
    if (doc.contains("certificate") && doc["certificate"].is_object()) {
        const Json& cert = doc["certificate"];
        if (cert.contains("max_deviation")) {
            out.max_deviation = rational_field(cert["max_deviation"], "result certificate max_deviation");
        }
        if (cert.contains("exact") && cert["exact"].is_boolean()) out.exact = cert["exact"].get<bool>();
    }
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

ColorfulInstance parse_instance(const Json& doc) {
    ColorfulInstance out;
    out.d = int_field(doc, "d", "instance");
    out.m = int_field(doc, "m", "instance");
    const Json& columns = array_field(doc, "columns", "instance");
    for (std::size_t nu = 0; nu < columns.size(); ++nu) {
        const std::string where = "instance column " + std::to_string(nu + 1);
        if (!columns[nu].is_array()) throw InputError(where + ": expected a list of vectors");
        std::vector<RationalVector> column;
        for (const auto& v : columns[nu]) column.push_back(rational_list(v, where));
        out.columns.push_back(std::move(column));
    }
    validate_instance(out);
    return out;
}

Group parse_group(const Json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        throw InputError("group: missing \"kind\"");
    }
    const auto kind = doc["kind"].get<std::string>();
    try {
        if (kind == "cyclic") return Group::cyclic(int_field(doc, "order", "group"));
        if (kind == "elementary_abelian") {
            return Group::elementary_abelian(int_field(doc, "p", "group"), int_field(doc, "r", "group"));
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("group: ") + e.what());
    }
    throw InputError("group: unknown kind \"" + kind + "\"");
}

Json group_to_json(const Group& group) {
    if (group.kind() == GroupKind::Cyclic) return Json{{"kind", "cyclic"}, {"order", group.order()}};
    return Json{{"kind", "elementary_abelian"}, {"p", group.prime()}, {"r", group.rank()}};
}

ComplexInput parse_complex_input(const Json& doc) {
    if (!doc.is_object() || !doc.contains("group")) throw InputError("complex: missing \"group\"");
    ComplexInput input{parse_group(doc["group"]), 0, 0, 1, {}};
    input.N = int_field(doc, "N", "complex");
    input.depth = int_field(doc, "depth", "complex");
    if (input.N < 0 || input.depth < 0) throw InputError("complex: N and depth must be nonnegative");
    const Json& labels = array_field(doc, "labels", "complex");
    int rows = 1;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        const Json& entry = labels[v];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
            throw InputError("complex label " + std::to_string(v) + ": expected [g, i]");
        }
        CrossLabel label{entry[0].get<int>(), entry[1].get<int>()};
        if (!input.group.valid(label.g) || label.row < 1) {
            throw InputError("complex label " + std::to_string(v) + " is out of range");
        }
        rows = std::max(rows, label.row);
        input.labels.push_back(label);
    }
    input.n = doc.contains("n") ? int_field(doc, "n", "complex") : rows;
    if (rows > input.n) throw InputError("complex: a label row exceeds n");
    return input;
}

}  // namespace equidiv
