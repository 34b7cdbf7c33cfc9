#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "form_space.hpp"
#include "gin.hpp"
#include "monomial_ideal.hpp"
#include "verify.hpp"

namespace ginspace {

/// Wrap a command's payload in the common report envelope.  `status` is
/// one of "ok", "failed", "inconclusive"; `seed` is null for commands that
/// draw no randomness.
inline nlohmann::json report_envelope(const std::string& command,
                                      const std::string& status,
                                      std::optional<std::uint64_t> seed,
                                      nlohmann::json data) {
    nlohmann::json out{{"tool", "ginspace"},
                       {"command", command},
                       {"status", status},
                       {"data", std::move(data)}};
    if (seed)
        out["seed"] = *seed;
    else
        out["seed"] = nullptr;
    return out;
}

inline nlohmann::json monomials_json(const std::vector<Monomial>& ms) {
    nlohmann::json out = nlohmann::json::array();
    for (const Monomial& m : ms)
        out.push_back(m.to_string());
    return out;
}

inline nlohmann::json monomial_space_json(const MonomialSpace& t) {
    return nlohmann::json{{"num_vars", t.num_vars()},
                          {"degree", t.degree()},
                          {"dimension", static_cast<int>(t.size())},
                          {"monomials", monomials_json(t.monomials())}};
}

inline nlohmann::json monomial_ideal_json(const MonomialIdeal& j) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : j.minimal_generators())
        gens.push_back(nlohmann::json{{"monomial", g.to_string()},
                                      {"degree", g.degree()}});
    return nlohmann::json{{"num_vars", j.num_vars()},
                          {"generators", std::move(gens)}};
}

template <ExactField F>
nlohmann::json form_space_json(const FormSpace<F>& v) {
    nlohmann::json basis = nlohmann::json::array();
    for (const Polynomial<F>& b : v.basis_polynomials())
        basis.push_back(b.to_string());
    return nlohmann::json{{"num_vars", v.num_vars()},
                          {"degree", v.degree()},
                          {"dimension", v.dim()},
                          {"basis", std::move(basis)}};
}

template <ExactField F>
nlohmann::json gin_result_json(const GinResult<F>& g) {
    return nlohmann::json{{"initial_space", monomial_space_json(g.monomials)},
                          {"trials", g.trials},
                          {"agreed", g.agreed},
                          {"seed", g.seed}};
}

inline nlohmann::json locus_json(const LocusReport& r) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const std::vector<Rational>& point : r.witness_points) {
        nlohmann::json coords = nlohmann::json::array();
        for (const Rational& c : point)
            coords.push_back(c.to_string());
        witnesses.push_back(std::move(coords));
    }
    return nlohmann::json{
        {"kind", locus_kind_name(r.kind)},
        {"num_vars", r.num_vars},
        {"degree", r.degree},
        {"max_degree", r.max_degree},
        {"quotient_values", r.quotient_values},
        {"tail_value", r.tail_value},
        {"hp_degree", r.hp_degree},
        {"codimension", r.codimension},
        {"witness_points", std::move(witnesses)},
        {"witnesses_checked", r.witnesses_checked},
        {"witnesses_vanish", r.witnesses_vanish}};
}

inline nlohmann::json main_theorem_json(const MainTheoremReport& r) {
    nlohmann::json matches = nlohmann::json::array();
    for (const auto& [degree, matched] : r.degree_matches) {
        nlohmann::json row{{"degree", degree}, {"matches", matched}};
        auto it = r.observed.find(degree);
        if (it != r.observed.end())
            row["observed"] = monomials_json(it->second.monomials());
        row["expected"] = monomials_json(r.j.piece(degree).monomials());
        matches.push_back(std::move(row));
    }
    return nlohmann::json{
        {"restriction", r.restriction},
        {"degree", r.degree},
        {"max_degree", r.max_degree},
        {"hypothesis_holds", r.hypothesis_holds},
        {"restriction_consistent", r.restriction_consistent},
        {"initial_space", monomial_space_json(r.staircase)},
        {"restricted_staircase",
         monomial_space_json(r.restricted_staircase)},
        {"constructed_ideal", monomial_ideal_json(r.j)},
        {"comparisons", std::move(matches)},
        {"all_match", r.all_match},
        {"verified", r.verified},
        {"trials", r.trials},
        {"seed", r.seed}};
}

inline nlohmann::json corollary_json(const CorollaryReport& r) {
    return nlohmann::json{{"num_vars", r.num_vars},
                          {"degree", r.degree},
                          {"hypothesis_holds", r.hypothesis_holds},
                          {"ideal_codimension", r.j_codimension},
                          {"applies", r.applies},
                          {"locus", locus_json(r.locus)},
                          {"codims_match", r.codims_match},
                          {"verified", r.verified},
                          {"initial_space", monomial_space_json(r.staircase)},
                          {"constructed_ideal", monomial_ideal_json(r.j)},
                          {"trials", r.trials},
                          {"seed", r.seed}};
}

inline nlohmann::json example_case_json(const ExampleCaseReport& r) {
    return nlohmann::json{{"name", r.name},
                          {"dimension", r.dimension},
                          {"dimension_ok", r.dimension_ok},
                          {"initial_space", monomial_space_json(r.staircase)},
                          {"gin_matches", r.gin_matches},
                          {"locus", locus_json(r.locus)},
                          {"locus_as_expected", r.locus_as_expected},
                          {"witnesses_checked", r.witnesses_checked},
                          {"witnesses_vanish", r.witnesses_vanish},
                          {"pass", r.pass}};
}

inline nlohmann::json example_suite_json(const ExampleSuiteReport& r) {
    nlohmann::json cases = nlohmann::json::array();
    for (const ExampleCaseReport& c : r.cases)
        cases.push_back(example_case_json(c));
    return nlohmann::json{
        {"cases", std::move(cases)},
        {"reconstruction_b_dim", r.reconstruction_b_dim},
        {"reconstruction_b_matches", r.reconstruction_b_matches},
        {"reconstruction_c_dim", r.reconstruction_c_dim},
        {"reconstruction_c_matches", r.reconstruction_c_matches},
        {"all_pass", r.all_pass},
        {"trials", r.trials},
        {"seed", r.seed}};
}

inline nlohmann::json colon_exploration_json(const ColonExplorationReport& r) {
    return nlohmann::json{
        {"initial_space", monomial_space_json(r.staircase)},
        {"colon_initial_space", monomial_space_json(r.colon_staircase)},
        {"colon_square_dim", r.colon_square_dim},
        {"colon_pair_dim", r.colon_pair_dim},
        {"colon_square_nonzero", r.colon_square_nonzero},
        {"colon_pair_nonzero", r.colon_pair_nonzero},
        {"trials", r.trials},
        {"seed", r.seed}};
}

inline nlohmann::json
common_factor_scenario_json(const CommonFactorScenarioReport& r) {
    return nlohmann::json{{"factor_degree", r.factor_degree},
                          {"block_degree", r.block_degree},
                          {"block_vars", r.block_vars},
                          {"num_vars", r.num_vars},
                          {"dimension", r.dimension},
                          {"initial_space", monomial_space_json(r.staircase)},
                          {"expected", monomial_space_json(r.expected)},
                          {"gin_matches", r.gin_matches},
                          {"factor_confirmed", r.factor_confirmed},
                          {"verified", r.verified},
                          {"trials", r.trials},
                          {"seed", r.seed}};
}

} // namespace ginspace
