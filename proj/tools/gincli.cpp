// ginspace — exact-arithmetic initial spaces, generic initial spaces, and
// the verification pipelines built on them.
//
// Exit codes: 0 success/verified, 1 usage or input error, 2 verification
// failure, 3 inconclusive (undecided locus, uncertified randomness, or a
// failed hypothesis that makes a verdict inapplicable).

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginspace/form_space.hpp"
#include "ginspace/gin.hpp"
#include "ginspace/monomial_ideal.hpp"
#include "ginspace/parse.hpp"
#include "ginspace/render.hpp"
#include "ginspace/report_json.hpp"
#include "ginspace/verify.hpp"

namespace {

using namespace ginspace;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

InputDocument load_document(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_document(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

FormSpace<Rational> space_of(const InputDocument& doc,
                             const std::string& path) {
    if (doc.forms.empty())
        throw UsageError(path + ": input defines no forms");
    return FormSpace<Rational>(doc.num_vars, doc.degree, doc.forms);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_monomials(const std::vector<Monomial>& ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i)
            out += ", ";
        out += ms[i].to_string();
    }
    return out.empty() ? std::string("(none)") : out;
}

/// Effective-value resolution: explicit flag beats the input file's options
/// block, which beats the environment (seed only), which beats the
/// built-in default.
std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value,
                           const InputDocument* doc) {
    if (flag && flag->count())
        return flag_value;
    if (doc && doc->seed)
        return *doc->seed;
    if (const char* env = std::getenv("GINSPACE_SEED")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw UsageError(
                "GINSPACE_SEED must be a nonnegative integer, got: " +
                std::string(env));
        }
    }
    return 1;
}

int resolve_int(const CLI::Option* flag, int flag_value,
                const std::optional<int>& file_value, int fallback) {
    if (flag && flag->count())
        return flag_value;
    if (file_value)
        return *file_value;
    return fallback;
}

void emit_json(const std::string& command, const std::string& status,
               std::optional<std::uint64_t> seed, nlohmann::json data) {
    std::cout << report_envelope(command, status, seed, std::move(data))
                     .dump(2)
              << "\n";
}

nlohmann::json locus_lines(const LocusReport& r, std::ostream& out) {
    out << "kind: " << locus_kind_name(r.kind) << "\n";
    out << "quotient values (deg " << r.degree << ".." << r.max_degree
        << "):";
    for (long long v : r.quotient_values)
        out << " " << v;
    out << "\n";
    switch (r.kind) {
    case LocusKind::Empty:
        break;
    case LocusKind::ZeroDimensional:
        out << "points (tail value): " << r.tail_value << "\n";
        out << "codimension: " << r.codimension << "\n";
        break;
    case LocusKind::PositiveDimensional:
        out << "hilbert polynomial degree: " << r.hp_degree << "\n";
        out << "codimension: " << r.codimension << "\n";
        break;
    case LocusKind::Inconclusive:
        out << "no verdict: increase --max-degree\n";
        break;
    }
    return locus_json(r);
}

// ---------------------------------------------------------------- commands

int cmd_in(const std::string& file, bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const MonomialSpace t = initial_space(v);
    if (json) {
        nlohmann::json data = form_space_json(v);
        data["initial_space"] = monomial_space_json(t);
        emit_json("in", "ok", std::nullopt, std::move(data));
    } else {
        std::cout << "dim: " << v.dim() << "\n";
        std::cout << "in(V): " << join_monomials(t.monomials()) << "\n";
    }
    return 0;
}

int cmd_gin(const std::string& file, const CLI::Option* seed_flag,
            std::uint64_t seed_value, const CLI::Option* trials_flag,
            int trials_value, const CLI::Option* range_flag, int range_value,
            bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, &doc);
    const int trials = resolve_int(trials_flag, trials_value, doc.trials, 3);
    const int range = resolve_int(range_flag, range_value, doc.range, 1000);
    const GinResult<Rational> g = gin(v, trials, seed, range);
    if (json) {
        emit_json("gin", "ok", seed, gin_result_json(g));
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "gin(V): " << join_monomials(g.monomials.monomials())
                  << "\n";
        std::cout << "agreed: " << yes_no(g.agreed) << " (" << g.trials
                  << " trials)\n";
    }
    return 0;
}

void print_space(const FormSpace<Rational>& v) {
    std::cout << "dim: " << v.dim() << "\n";
    if (v.is_zero_space()) {
        std::cout << "basis: (zero space)\n";
        return;
    }
    std::cout << "basis:\n";
    for (const Polynomial<Rational>& b : v.basis_polynomials())
        std::cout << "  " << b.to_string() << "\n";
}

int cmd_colon(const std::string& file, const std::string& by,
              const std::string& by_form, bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    if (by.empty() == by_form.empty())
        throw UsageError("colon needs exactly one of --by or --by-form");

    auto parse_arg = [&](const std::string& text,
                         const char* flag) -> Polynomial<Rational> {
        try {
            return parse_polynomial(text, doc.num_vars);
        } catch (const ParseError& e) {
            throw UsageError(std::string(flag) + ": " + e.what());
        }
    };
    FormSpace<Rational> result = v;
    if (!by.empty()) {
        const Polynomial<Rational> m = parse_arg(by, "--by");
        if (m.is_zero() || m.term_count() != 1)
            throw UsageError("--by expects a single monomial");
        result = colon_monomial(v, m.leading_monomial());
    } else {
        const Polynomial<Rational> h = parse_arg(by_form, "--by-form");
        if (h.is_zero() || h.degree() != 1)
            throw UsageError("--by-form expects a nonzero linear form");
        result = colon_form(v, h);
    }
    if (json) {
        emit_json("colon", "ok", std::nullopt, form_space_json(result));
    } else {
        print_space(result);
    }
    return 0;
}

int cmd_restrict(const std::string& file, int drop, bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const FormSpace<Rational> result = restrict(v, drop);
    if (json) {
        emit_json("restrict", "ok", std::nullopt, form_space_json(result));
    } else {
        print_space(result);
    }
    return 0;
}

int cmd_jideal(const std::string& file, int restriction,
               const CLI::Option* seed_flag, std::uint64_t seed_value,
               const CLI::Option* trials_flag, int trials_value,
               const CLI::Option* range_flag, int range_value, bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, &doc);
    const int trials = resolve_int(trials_flag, trials_value, doc.trials, 3);
    const int range = resolve_int(range_flag, range_value, doc.range, 1000);
    const GinResult<Rational> g = gin(v, trials, seed, range);
    MonomialSpace t = g.monomials;
    if (restriction > 0)
        t = t.restrict_top(restriction);
    const ColonRestrictIdeal construction = build_J(t);
    const bool in_degree_d =
        has_generator_in_degree(construction.ideal, t.degree());

    std::string gens;
    for (const Monomial& m : construction.ideal.minimal_generators()) {
        if (!gens.empty())
            gens += ", ";
        gens += m.to_string() + " (deg " + std::to_string(m.degree()) + ")";
    }
    if (json) {
        nlohmann::json data{
            {"initial_space", monomial_space_json(g.monomials)},
            {"restriction", restriction},
            {"ideal", monomial_ideal_json(construction.ideal)},
            {"generator_in_degree_d", in_degree_d}};
        emit_json("jideal", "ok", seed, std::move(data));
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "gens: " << gens
                  << "; generator in degree d: " << yes_no(in_degree_d)
                  << "\n";
    }
    return 0;
}

int cmd_hilbert(const std::string& file, int max_degree, bool quotient,
                bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const int d = v.degree();
    std::vector<long long> values;
    for (int e = 0; e <= max_degree; ++e) {
        const long long full =
            static_cast<long long>(monomials_of_degree(v.num_vars(), e)
                                       .size());
        const long long ideal_dim =
            e < d ? 0 : static_cast<long long>(ideal_piece(v, e).dim());
        values.push_back(quotient ? full - ideal_dim : ideal_dim);
    }
    if (json) {
        nlohmann::json data{{"num_vars", v.num_vars()},
                            {"degree", d},
                            {"max_degree", max_degree},
                            {"quotient", quotient},
                            {"values", values}};
        emit_json("hilbert", "ok", std::nullopt, std::move(data));
    } else {
        for (int e = 0; e <= max_degree; ++e)
            std::cout << e << ": " << values[static_cast<std::size_t>(e)]
                      << "\n";
    }
    return 0;
}

int cmd_locus(const std::string& file, const CLI::Option* maxdeg_flag,
              int maxdeg_value, bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const int max_degree =
        resolve_int(maxdeg_flag, maxdeg_value, doc.maxdeg, v.degree() + 4);
    const LocusReport report = analyze_locus(v, max_degree);
    const bool inconclusive = report.kind == LocusKind::Inconclusive;
    if (json) {
        emit_json("locus", inconclusive ? "inconclusive" : "ok",
                  std::nullopt, locus_json(report));
    } else {
        locus_lines(report, std::cout);
    }
    return inconclusive ? 3 : 0;
}

int cmd_staircase(const std::string& file, const std::string& format,
                  bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const MonomialSpace t = initial_space(v);
    if (json) {
        emit_json("staircase", "ok", std::nullopt, staircase_json(t));
        return 0;
    }
    if (format == "ascii") {
        std::cout << staircase_ascii(t) << "\n";
    } else if (format == "json") {
        std::cout << staircase_json(t).dump(2) << "\n";
    } else {
        throw UsageError("--format must be ascii or json");
    }
    return 0;
}

// ------------------------------------------------------- verify commands

int cmd_verify_main(const std::string& file, int restriction,
                    const CLI::Option* maxdeg_flag, int maxdeg_value,
                    const CLI::Option* seed_flag, std::uint64_t seed_value,
                    const CLI::Option* trials_flag, int trials_value,
                    const CLI::Option* range_flag, int range_value,
                    bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, &doc);
    const int trials = resolve_int(trials_flag, trials_value, doc.trials, 3);
    const int range = resolve_int(range_flag, range_value, doc.range, 1000);
    const int max_degree = resolve_int(maxdeg_flag, maxdeg_value, doc.maxdeg,
                                       v.degree() + 3);
    const MainTheoremReport report =
        restriction == 0
            ? verify_main_theorem_a(v, max_degree, trials, seed, range)
            : verify_main_theorem_b(v, restriction, max_degree, trials,
                                    seed, range);
    const std::string command = restriction == 0 ? "verify main-a"
                                                 : "verify main-b";
    const std::string status = report.verified ? "ok"
                               : report.hypothesis_holds ? "failed"
                                                         : "inconclusive";
    if (json) {
        emit_json(command, status, seed, main_theorem_json(report));
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "gin(V): " << join_monomials(report.staircase.monomials())
                  << "\n";
        if (restriction > 0)
            std::cout << "restricted staircase: "
                      << join_monomials(
                             report.restricted_staircase.monomials())
                      << "\n";
        std::cout << "constructed ideal: " << report.j.to_string() << "\n";
        std::cout << "hypothesis (no generator in degree " << report.degree
                  << "): " << yes_no(report.hypothesis_holds) << "\n";
        std::cout << "restriction consistent: "
                  << yes_no(report.restriction_consistent) << "\n";
        for (const auto& [e, matched] : report.degree_matches)
            std::cout << "degree " << e << ": "
                      << (matched ? "match" : "MISMATCH") << "\n";
        std::cout << "verified: " << yes_no(report.verified) << "\n";
    }
    if (report.verified)
        return 0;
    return report.hypothesis_holds ? 2 : 3;
}

int cmd_verify_corollary(const std::string& file,
                         const CLI::Option* maxdeg_flag, int maxdeg_value,
                         const CLI::Option* seed_flag,
                         std::uint64_t seed_value,
                         const CLI::Option* trials_flag, int trials_value,
                         const CLI::Option* range_flag, int range_value,
                         bool json) {
    const InputDocument doc = load_document(file);
    const FormSpace<Rational> v = space_of(doc, file);
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, &doc);
    const int trials = resolve_int(trials_flag, trials_value, doc.trials, 3);
    const int range = resolve_int(range_flag, range_value, doc.range, 1000);
    const int max_degree = resolve_int(maxdeg_flag, maxdeg_value, doc.maxdeg,
                                       v.degree() + 4);
    const CorollaryReport report =
        verify_corollary(v, max_degree, trials, seed, range);
    const bool locus_undecided =
        report.locus.kind == LocusKind::Inconclusive;
    const std::string status =
        report.verified ? "ok"
        : (!report.applies || locus_undecided) ? "inconclusive"
                                               : "failed";
    if (json) {
        emit_json("verify corollary", status, seed, corollary_json(report));
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "gin(V): " << join_monomials(report.staircase.monomials())
                  << "\n";
        std::cout << "constructed ideal: " << report.j.to_string() << "\n";
        std::cout << "hypothesis (no generator in degree " << report.degree
                  << "): " << yes_no(report.hypothesis_holds) << "\n";
        std::cout << "ideal codimension: " << report.j_codimension << "\n";
        std::cout << "applies (hypothesis and codim <= "
                  << report.num_vars - 2 << "): " << yes_no(report.applies)
                  << "\n";
        std::cout << "locus kind: " << locus_kind_name(report.locus.kind)
                  << "\n";
        if (report.locus.codimension >= 0)
            std::cout << "locus codimension: " << report.locus.codimension
                      << "\n";
        std::cout << "codimensions match: " << yes_no(report.codims_match)
                  << "\n";
        std::cout << "verified: " << yes_no(report.verified) << "\n";
    }
    if (report.verified)
        return 0;
    return (!report.applies || locus_undecided) ? 3 : 2;
}

int cmd_verify_examples(const std::string& file,
                        const CLI::Option* maxdeg_flag, int maxdeg_value,
                        const CLI::Option* seed_flag,
                        std::uint64_t seed_value,
                        const CLI::Option* trials_flag, int trials_value,
                        const CLI::Option* range_flag, int range_value,
                        bool json) {
    std::optional<InputDocument> doc;
    std::optional<Polynomial<Rational>> quadric, cubic;
    if (!file.empty()) {
        doc = load_document(file);
        if (doc->num_vars != 3)
            throw UsageError(file + ": the example suite needs vars: 3");
        auto q = doc->candidates.find("q");
        if (q != doc->candidates.end())
            quadric = q->second;
        auto p = doc->candidates.find("p");
        if (p != doc->candidates.end())
            cubic = p->second;
    }
    const InputDocument* doc_ptr = doc ? &*doc : nullptr;
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, doc_ptr);
    const int trials = resolve_int(trials_flag, trials_value,
                                   doc ? doc->trials : std::nullopt, 3);
    const int range = resolve_int(range_flag, range_value,
                                  doc ? doc->range : std::nullopt, 1000);
    const int max_degree = resolve_int(maxdeg_flag, maxdeg_value,
                                       doc ? doc->maxdeg : std::nullopt, 8);
    const ExampleSuiteReport report = verify_examples_2_6(
        trials, seed, range, max_degree, quadric, cubic);
    if (json) {
        emit_json("verify examples-2.6",
                  report.all_pass ? "ok" : "failed", seed,
                  example_suite_json(report));
    } else {
        std::cout << "seed: " << seed << "\n";
        for (const ExampleCaseReport& c : report.cases) {
            std::cout << "case " << c.name << ": dim " << c.dimension << " ("
                      << (c.dimension_ok ? "ok" : "WRONG")
                      << "); gin matches: " << yes_no(c.gin_matches)
                      << "; locus as expected: "
                      << yes_no(c.locus_as_expected)
                      << "; witnesses vanish: "
                      << (c.witnesses_checked ? yes_no(c.witnesses_vanish)
                                              : "n/a")
                      << "; pass: " << yes_no(c.pass) << "\n";
        }
        std::cout << "reconstruction b: dim " << report.reconstruction_b_dim
                  << ", matches: " << yes_no(report.reconstruction_b_matches)
                  << "\n";
        std::cout << "reconstruction c: dim " << report.reconstruction_c_dim
                  << ", matches: " << yes_no(report.reconstruction_c_matches)
                  << "\n";
        std::cout << "all pass: " << yes_no(report.all_pass) << "\n";
    }
    return report.all_pass ? 0 : 2;
}

int cmd_verify_exploration(const std::string& file,
                           const CLI::Option* seed_flag,
                           std::uint64_t seed_value,
                           const CLI::Option* trials_flag, int trials_value,
                           const CLI::Option* range_flag, int range_value,
                           bool json) {
    std::optional<InputDocument> doc;
    if (!file.empty())
        doc = load_document(file);
    const InputDocument* doc_ptr = doc ? &*doc : nullptr;
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, doc_ptr);
    const int trials = resolve_int(trials_flag, trials_value,
                                   doc ? doc->trials : std::nullopt, 3);
    const int range = resolve_int(range_flag, range_value,
                                  doc ? doc->range : std::nullopt, 1000);
    const FormSpace<Rational> v =
        doc ? space_of(*doc, file) : default_quartic_example(seed, range);
    const ColonExplorationReport report =
        explore_example_2_7(v, trials, seed, range);
    if (json) {
        emit_json("verify example-2.7", "ok", seed,
                  colon_exploration_json(report));
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "gin(V): " << join_monomials(report.staircase.monomials())
                  << "\n";
        std::cout << "in(V:x3): "
                  << join_monomials(report.colon_staircase.monomials())
                  << "\n";
        std::cout << "dim(V : h^2) = " << report.colon_square_dim
                  << " (nonzero: " << yes_no(report.colon_square_nonzero)
                  << ")\n";
        std::cout << "dim(V : h1*h2) = " << report.colon_pair_dim
                  << " (nonzero: " << yes_no(report.colon_pair_nonzero)
                  << ")\n";
    }
    return 0;
}

int cmd_verify_scenario(int a, int b, int m, int n, int cap,
                        const CLI::Option* seed_flag,
                        std::uint64_t seed_value,
                        const CLI::Option* trials_flag, int trials_value,
                        const CLI::Option* range_flag, int range_value,
                        bool json) {
    const std::uint64_t seed = resolve_seed(seed_flag, seed_value, nullptr);
    const int trials = resolve_int(trials_flag, trials_value, std::nullopt,
                                   3);
    const int range = resolve_int(range_flag, range_value, std::nullopt,
                                  1000);
    const CommonFactorScenarioReport report =
        scenario_theorem_1(a, b, m, n, seed, trials, range, cap);
    if (json) {
        emit_json("verify theorem-1",
                  report.verified ? "ok" : "failed", seed,
                  common_factor_scenario_json(report));
    } else {
        std::cout << "seed: " << seed << "\n";
        std::cout << "dim: " << report.dimension << "\n";
        std::cout << "gin(V): " << join_monomials(report.staircase.monomials())
                  << "\n";
        std::cout << "expected: " << join_monomials(report.expected.monomials())
                  << "\n";
        std::cout << "gin matches: " << yes_no(report.gin_matches) << "\n";
        std::cout << "factor confirmed: " << yes_no(report.factor_confirmed)
                  << "\n";
        std::cout << "verified: " << yes_no(report.verified) << "\n";
    }
    return report.verified ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ginspace: exact initial spaces, generic initial spaces, and the "
        "ideals and loci built from them"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a JSON report envelope");

    // Shared option storage; each subcommand registers its own flags into
    // these slots and we read CLI::Option counts to tell explicit values
    // from defaults.
    std::string file, by, by_form, format = "ascii";
    std::uint64_t seed = 1;
    int trials = 3, range = 1000, max_degree = 0, drop = 1, restriction = 0;
    int sc_a = 1, sc_b = 1, sc_m = 3, sc_n = 3, sc_cap = 6;
    bool quotient = false;

    auto add_random_opts = [&](CLI::App* sc, CLI::Option** seed_opt,
                               CLI::Option** trials_opt,
                               CLI::Option** range_opt) {
        *seed_opt = sc->add_option("--seed", seed,
                                   "seed for the deterministic generator");
        *trials_opt =
            sc->add_option("--trials", trials,
                           "coordinate changes per agreement round");
        *range_opt = sc->add_option(
            "--range", range, "coefficient range for random draws");
    };

    CLI::App* sc_in = app.add_subcommand("in", "initial space of the input");
    sc_in->add_option("file", file, "input file")->required();

    CLI::App* sc_gin =
        app.add_subcommand("gin", "generic initial space via random "
                                  "coordinate changes");
    sc_gin->add_option("file", file, "input file")->required();
    CLI::Option *gin_seed, *gin_trials, *gin_range;
    add_random_opts(sc_gin, &gin_seed, &gin_trials, &gin_range);

    CLI::App* sc_colon =
        app.add_subcommand("colon", "colon space V : m or V : h");
    sc_colon->add_option("file", file, "input file")->required();
    sc_colon->add_option("--by", by, "monomial to colon by");
    sc_colon->add_option("--by-form", by_form, "linear form to colon by");

    CLI::App* sc_restrict = app.add_subcommand(
        "restrict", "set the top variables to zero and renumber");
    sc_restrict->add_option("file", file, "input file")->required();
    sc_restrict->add_option("--drop", drop, "how many top variables")
        ->required();

    CLI::App* sc_jideal = app.add_subcommand(
        "jideal", "colon-restrict ideal of the generic staircase");
    sc_jideal->add_option("file", file, "input file")->required();
    sc_jideal->add_option("--restrict", restriction,
                          "restrict the staircase first");
    CLI::Option *jid_seed, *jid_trials, *jid_range;
    add_random_opts(sc_jideal, &jid_seed, &jid_trials, &jid_range);

    CLI::App* sc_hilbert =
        app.add_subcommand("hilbert", "hilbert function of the generated "
                                      "ideal (or its quotient)");
    sc_hilbert->add_option("file", file, "input file")->required();
    sc_hilbert->add_option("--max-degree", max_degree, "last degree")
        ->required();
    sc_hilbert->add_flag("--quotient", quotient,
                         "dimensions of the quotient ring instead");

    CLI::App* sc_locus = app.add_subcommand(
        "locus", "classify the vanishing locus from quotient dimensions");
    sc_locus->add_option("file", file, "input file")->required();
    CLI::Option* locus_maxdeg =
        sc_locus->add_option("--max-degree", max_degree, "analysis window");

    CLI::App* sc_stair =
        app.add_subcommand("staircase", "render the initial-space staircase");
    sc_stair->add_option("file", file, "input file")->required();
    sc_stair->add_option("--format", format, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));

    CLI::App* sc_verify =
        app.add_subcommand("verify", "run a verification pipeline");
    sc_verify->require_subcommand(1);

    CLI::App* v_main_a = sc_verify->add_subcommand(
        "main-a", "ideal of the moved space vs the staircase construction");
    v_main_a->add_option("file", file, "input file")->required();
    CLI::Option* ma_maxdeg =
        v_main_a->add_option("--max-degree", max_degree, "last degree");
    CLI::Option *ma_seed, *ma_trials, *ma_range;
    add_random_opts(v_main_a, &ma_seed, &ma_trials, &ma_range);

    CLI::App* v_main_b = sc_verify->add_subcommand(
        "main-b", "same check after restricting away top variables");
    v_main_b->add_option("file", file, "input file")->required();
    v_main_b->add_option("--restrict", restriction, "restriction depth")
        ->required();
    CLI::Option* mb_maxdeg =
        v_main_b->add_option("--max-degree", max_degree, "last degree");
    CLI::Option *mb_seed, *mb_trials, *mb_range;
    add_random_opts(v_main_b, &mb_seed, &mb_trials, &mb_range);

    CLI::App* v_cor = sc_verify->add_subcommand(
        "corollary", "codimension of the construction vs the locus");
    v_cor->add_option("file", file, "input file")->required();
    CLI::Option* cor_maxdeg =
        v_cor->add_option("--max-degree", max_degree, "locus window");
    CLI::Option *cor_seed, *cor_trials, *cor_range;
    add_random_opts(v_cor, &cor_seed, &cor_trials, &cor_range);

    CLI::App* v_ex26 = sc_verify->add_subcommand(
        "examples-2.6", "the bundled three-case example suite");
    v_ex26->add_option("file", file,
                       "optional input supplying candidates p, q");
    CLI::Option* ex_maxdeg =
        v_ex26->add_option("--max-degree", max_degree, "locus window");
    CLI::Option *ex_seed, *ex_trials, *ex_range;
    add_random_opts(v_ex26, &ex_seed, &ex_trials, &ex_range);

    CLI::App* v_ex27 = sc_verify->add_subcommand(
        "example-2.7", "degree-4 exploration: colon staircase and nonzero "
                       "colon spaces");
    v_ex27->add_option("file", file, "optional input space (3 vars, degree "
                                     "4, dimension 7)");
    CLI::Option *x7_seed, *x7_trials, *x7_range;
    add_random_opts(v_ex27, &x7_seed, &x7_trials, &x7_range);

    CLI::App* v_t1 = sc_verify->add_subcommand(
        "theorem-1", "common-factor scenario: gin of p * (block of "
                     "degree-b forms)");
    v_t1->add_option("--a", sc_a, "degree of the common factor")->required();
    v_t1->add_option("--b", sc_b, "degree of the block")->required();
    v_t1->add_option("--m", sc_m, "variables spanned by the block")
        ->required();
    v_t1->add_option("--n", sc_n, "ambient variables")->required();
    v_t1->add_option("--cap", sc_cap, "total degree cap");
    CLI::Option *t1_seed, *t1_trials, *t1_range;
    add_random_opts(v_t1, &t1_seed, &t1_trials, &t1_range);

    // Let global flags like --json appear after the subcommand as well:
    // options a subcommand does not recognize fall through to its parent.
    const std::function<void(CLI::App&)> allow_global_flags =
        [&](CLI::App& node) {
            for (CLI::App* sub : node.get_subcommands(
                     [](const CLI::App*) { return true; })) {
                sub->fallthrough();
                allow_global_flags(*sub);
            }
        };
    allow_global_flags(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_in->parsed())
            return cmd_in(file, json);
        if (sc_gin->parsed())
            return cmd_gin(file, gin_seed, seed, gin_trials, trials,
                           gin_range, range, json);
        if (sc_colon->parsed())
            return cmd_colon(file, by, by_form, json);
        if (sc_restrict->parsed())
            return cmd_restrict(file, drop, json);
        if (sc_jideal->parsed())
            return cmd_jideal(file, restriction, jid_seed, seed, jid_trials,
                              trials, jid_range, range, json);
        if (sc_hilbert->parsed())
            return cmd_hilbert(file, max_degree, quotient, json);
        if (sc_locus->parsed())
            return cmd_locus(file, locus_maxdeg, max_degree, json);
        if (sc_stair->parsed())
            return cmd_staircase(file, format, json);
        if (sc_verify->parsed()) {
            if (v_main_a->parsed())
                return cmd_verify_main(file, 0, ma_maxdeg, max_degree,
                                       ma_seed, seed, ma_trials, trials,
                                       ma_range, range, json);
            if (v_main_b->parsed())
                return cmd_verify_main(file, restriction, mb_maxdeg,
                                       max_degree, mb_seed, seed, mb_trials,
                                       trials, mb_range, range, json);
            if (v_cor->parsed())
                return cmd_verify_corollary(file, cor_maxdeg, max_degree,
                                            cor_seed, seed, cor_trials,
                                            trials, cor_range, range, json);
            if (v_ex26->parsed())
                return cmd_verify_examples(file, ex_maxdeg, max_degree,
                                           ex_seed, seed, ex_trials, trials,
                                           ex_range, range, json);
            if (v_ex27->parsed())
                return cmd_verify_exploration(file, x7_seed, seed,
                                              x7_trials, trials, x7_range,
                                              range, json);
            if (v_t1->parsed())
                return cmd_verify_scenario(sc_a, sc_b, sc_m, sc_n, sc_cap,
                                           t1_seed, seed, t1_trials, trials,
                                           t1_range, range, json);
        }
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NonGenericError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        for (const MonomialSpace& t : e.staircases())
            std::cerr << "  saw: " << join_monomials(t.monomials()) << "\n";
        return 3;
    } catch (const RandomnessError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
