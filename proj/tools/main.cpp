#include "acceptance.hpp"

#include "equidiv/colorful.hpp"
#include "equidiv/crosspolytope.hpp"
#include "equidiv/division.hpp"
#include "equidiv/error.hpp"
#include "equidiv/io.hpp"
#include "equidiv/pipeline.hpp"
#include "equidiv/simmons_su.hpp"
#include "equidiv/tucker_search.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace equidiv;

namespace {

int verbosity = 0;

void emit(const std::string& output, const Json& doc) {
    if (output.empty()) {
        std::cout << dump(doc);
    } else {
        write_text_file(output, dump(doc));
    }
}

Rational parse_epsilon(const std::string& text) {
    const Rational epsilon = parse_rational(text);
    if (epsilon <= 0) throw InputError("epsilon must be positive");
    return epsilon;
}

void log_report(const DivisionReport& report) {
    std::cerr << "resolution " << report.resolution << " (" << report.levels << " levels), edge bound "
              << to_string(report.fineness_bound) << ", facets " << report.facets_scanned << ", cells visited "
              << report.cells_visited << ", pruned " << report.cells_pruned
              << (report.exact ? ", exact vertex" : "") << "\n";
}

GComplex build_complex(const Group& group, int N, int depth) {
    GComplex complex = build_join_complex(group, N);
    for (int d = 0; d < depth; ++d) complex = barycentric_subdivide(complex);
    return complex;
}

int run_divide(const std::string& measures_path, int k, const std::string& eps_text, int cap, int workers,
               const std::string& output) {
    const Rational epsilon = parse_epsilon(eps_text);
    const auto measures = parse_measures(parse_json(read_text_file(measures_path), measures_path));
    DivideOptions options;
    options.cap = cap;
    options.workers = workers;
    const DivideRun run = divide(measures, k, epsilon, options);
    if (verbosity > 0 && run.report) log_report(*run.report);
    emit(output, division_to_json(run.outcome));
    return 0;
}

int run_necklace(const std::string& text, int k, const std::string& output) {
    const BeadString beads = parse_beads(text);
    const NecklaceSplit split = split_necklace(beads, k);
    Json doc;
    doc["beads"] = beads.text();
    doc["k"] = k;
    doc["boundaries"] = split.boundaries;
    doc["assignment"] = split.assignment;
    doc["cuts"] = split.cut_count();
    Json pieces = Json::array();
    int left = 0;
    for (std::size_t j = 0; j < split.assignment.size(); ++j) {
        const int right = j < split.boundaries.size() ? split.boundaries[j] : beads.length();
        if (right > left) {
            pieces.push_back(Json{{"beads", beads.text().substr(left, right - left)}, {"part", split.assignment[j]}});
        }
        left = right;
    }
    doc["pieces"] = std::move(pieces);
    doc["shares"] = split.shares;
    emit(output, doc);
    return 0;
}

int run_verify(const std::string& result_path, const std::string& measures_path, const std::string& eps_text) {
    const Rational epsilon = parse_epsilon(eps_text);
    const auto measures = parse_measures(parse_json(read_text_file(measures_path), measures_path));
    const ResultRecord record = parse_result(parse_json(read_text_file(result_path), result_path));
    const ValuesTable values = values_table(record.scheme, measures);
    const Rational deviation = max_deviation(values);
    const bool ok = deviation < epsilon;
    std::cout << (ok ? "ok" : "FAILED") << " max_deviation " << to_string(deviation) << " epsilon "
              << to_string(epsilon) << "\n";
    if (!ok) std::cerr << "values deviate from 1/" << record.scheme.k << " by " << to_string(deviation) << "\n";
    return ok ? 0 : 1;
}

int run_cara(const std::string& instance_path) {
    const ColorfulInstance instance = parse_instance(parse_json(read_text_file(instance_path), instance_path));
    const ColorfulSelection selection = colorful_caratheodory(instance);
    Json doc;
    std::vector<int> alpha;
    for (int row : selection.alpha) alpha.push_back(row + 1);
    doc["alpha"] = alpha;
    Json witness = Json::array();
    for (const auto& c : selection.witness.coefficients) witness.push_back(to_string(c));
    doc["witness"] = std::move(witness);
    std::cout << dump(doc);
    return 0;
}

int run_tucker_verify(const std::string& complex_path, int workers, const std::string& output) {
    const ComplexInput input = parse_complex_input(parse_json(read_text_file(complex_path), complex_path));
    const GComplex complex = build_complex(input.group, input.N, input.depth);
    if (static_cast<int>(input.labels.size()) != complex.vertex_count()) {
        throw InputError("complex has " + std::to_string(complex.vertex_count()) + " vertices but " +
                         std::to_string(input.labels.size()) + " labels were given");
    }
    const Labeling labeling = [&](int v) { return LabelOutcome{false, input.labels[v]}; };
    SearchOptions options;
    options.workers = workers;
    options.spot_checks = 0;
    const SearchResult result = find_fully_labeled(complex, labeling, input.n, options);

    const GPolytope polytope = crosspolytope(input.group, input.n);
    std::vector<int> phi;
    for (const auto& label : input.labels) phi.push_back((label.row - 1) * input.group.order() + label.g);
    const TuckerTriple triple = verify_tucker_triple(complex, phi, polytope);

    Json doc;
    doc["group"] = group_to_json(input.group);
    doc["N"] = input.N;
    doc["depth"] = input.depth;
    doc["vertices"] = complex.vertex_count();
    doc["facets"] = complex.facet_count();
    if (result.kind == SearchResult::Kind::FoundSimplex) {
        doc["fully_labeled"] = Json{{"simplex", result.simplex}, {"row", result.i0}};
    } else {
        doc["fully_labeled"] = nullptr;
    }
    Json witness = Json::array();
    for (const auto& c : triple.coefficients) witness.push_back(to_string(c));
    doc["tucker"] = Json{{"found", triple.found}, {"simplex", triple.simplex}, {"witness", std::move(witness)}};
    emit(output, doc);
    if (!triple.found) {
        std::cerr << "no simplex maps onto a set whose hull contains the origin\n";
        return 1;
    }
    return 0;
}

int run_simmons_su(const std::string& instance_path, int workers, const std::string& output) {
    const Json doc = parse_json(read_text_file(instance_path), instance_path);
    if (!doc.is_object() || !doc.contains("group") || !doc.contains("labels")) {
        throw InputError("instance: expected \"group\", \"n\", \"depth\" and \"labels\"");
    }
    const Group group = parse_group(doc["group"]);
    const int n = doc.value("n", 1);
    const int depth = doc.value("depth", 0);
    const int rows = doc.value("rows", 1);
    if (n < 1 || depth < 0 || rows < 1) throw InputError("instance: n, rows >= 1 and depth >= 0 required");
    std::vector<Element> enumeration = default_enumeration(group);
    if (doc.contains("enumeration")) enumeration = doc["enumeration"].get<std::vector<Element>>();
    std::vector<RootLabel> labels;
    for (const auto& entry : doc["labels"]) {
        if (!entry.is_array() || entry.size() != 2) throw InputError("instance: labels are [j, m] pairs");
        labels.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    const GComplex complex = build_complex(group, n, depth);
    SearchOptions options;
    options.workers = workers;
    const ConjectureOutcome outcome = check_conjecture_instance(complex, labels, rows, enumeration, options);
    Json out;
    out["found"] = outcome.found;
    if (outcome.found) {
        out["vertices"] = outcome.vertices;
        out["m"] = outcome.m;
    }
    emit(output, out);
    return 0;
}

int run_selftest(const std::vector<int>& criteria) {
    const auto results = acceptance::run(criteria, std::cout);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact consensus division and labeled-simplex search"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", verbosity, "Report search statistics on stderr");

    std::string measures_path, result_path, output, beads, instance_path, complex_path, eps_text;
    int k = 2;
    int cap = 8;
    int workers = 1;
    std::vector<int> criteria;

    auto* divide = app.add_subcommand("divide", "Approximate consensus 1/k-division of measures");
    divide->add_option("--measures", measures_path, "Measure file")->required();
    divide->add_option("--k", k, "Number of parts")->required();
    divide->add_option("--epsilon", eps_text, "Tolerance as p/q")->required();
    divide->add_option("--cap", cap, "Refinement level cap")->check(CLI::PositiveNumber);
    divide->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    divide->add_option("-o,--output", output, "Result file")->required();

    auto* necklace = app.add_subcommand("necklace", "Exact discrete necklace split");
    necklace->add_option("--beads", beads, "Bead string over a-z")->required();
    necklace->add_option("--k", k, "Number of thieves")->required();
    necklace->add_option("-o,--output", output, "Result file (stdout when absent)");

    auto* verify = app.add_subcommand("verify", "Re-integrate a result file from scratch");
    verify->add_option("--result", result_path, "Result file")->required();
    verify->add_option("--measures", measures_path, "Measure file")->required();
    verify->add_option("--epsilon", eps_text, "Tolerance as p/q")->required();

    auto* cara = app.add_subcommand("cara", "Colorful Caratheodory transversal");
    cara->add_option("--instance", instance_path, "Instance file")->required();

    auto* tucker = app.add_subcommand("tucker-verify", "Fully labeled simplex and Tucker triple check");
    tucker->add_option("--complex", complex_path, "Labeled complex file")->required();
    tucker->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    tucker->add_option("-o,--output", output, "Result file (stdout when absent)");

    auto* simmons = app.add_subcommand("simmons-su", "Root-of-unity labeling instance");
    simmons->add_option("--instance", instance_path, "Instance file")->required();
    simmons->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    simmons->add_option("-o,--output", output, "Result file (stdout when absent)");

    auto* selftest = app.add_subcommand("selftest", "Run acceptance criteria");
    selftest->add_option("--criteria", criteria, "Criterion numbers (all when absent)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*divide) return run_divide(measures_path, k, eps_text, cap, workers, output);
        if (*necklace) return run_necklace(beads, k, output);
        if (*verify) return run_verify(result_path, measures_path, eps_text);
        if (*cara) return run_cara(instance_path);
        if (*tucker) return run_tucker_verify(complex_path, workers, output);
        if (*simmons) return run_simmons_su(instance_path, workers, output);
        if (*selftest) return run_selftest(criteria);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 1;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
