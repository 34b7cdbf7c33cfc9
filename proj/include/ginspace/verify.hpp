#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "form_space.hpp"
#include "gin.hpp"
#include "linear_change.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "prng.hpp"
#include "scalar.hpp"

namespace ginspace {

/// True iff every canonical basis element of the space is exactly divisible
/// by the candidate polynomial.
template <ExactField F>
bool verify_common_factor(const FormSpace<F>& v, const Polynomial<F>& p) {
    if (p.num_vars() != v.num_vars())
        throw DimensionError("candidate factor from a different ring");
    if (p.is_zero())
        throw EmptyInputError("zero candidate factor");
    if (p.degree() > v.degree())
        throw DegreeError("candidate factor of degree above the space");
    for (const Polynomial<F>& b : v.basis_polynomials())
        if (!exact_divide(b, p))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Vanishing-locus analysis via Hilbert-function stabilization.
// ---------------------------------------------------------------------------

enum class LocusKind { ZeroDimensional, Empty, PositiveDimensional,
                       Inconclusive };

inline std::string locus_kind_name(LocusKind kind) {
    switch (kind) {
    case LocusKind::ZeroDimensional:
        return "zero-dimensional";
    case LocusKind::Empty:
        return "empty";
    case LocusKind::PositiveDimensional:
        return "positive-dimensional";
    case LocusKind::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

struct LocusReport {
    LocusKind kind = LocusKind::Inconclusive;
    int num_vars = 0;
    int degree = 0;
    int max_degree = 0;
    /// dim S_e − dim (ideal of V)_e for e = degree..max_degree.
    std::vector<long long> quotient_values;
    /// Stabilized quotient value: number of points (with multiplicity) when
    /// zero-dimensional, 0 when empty, −1 otherwise.
    long long tail_value = -1;
    /// Degree of the eventual Hilbert polynomial (= projective dimension of
    /// the locus) when determined; −1 otherwise.
    int hp_degree = -1;
    /// (n−1) − hp_degree when the locus is nonempty and determined; −1
    /// otherwise.
    int codimension = -1;
    std::vector<std::vector<Rational>> witness_points;
    bool witnesses_checked = false;
    bool witnesses_vanish = false;
};

/// Study the vanishing locus of V through the quotient Hilbert values
/// dim S_e − dim (ideal)_e on the window degree..max_degree.  A trailing
/// constant run of length ≥ 2 in the k-th difference row determines the
/// answer: k = 0 with positive constant means a zero-dimensional locus of
/// that many points (with multiplicity), k = 0 with constant 0 means an
/// empty projective locus, and k ≥ 1 means a locus of projective dimension
/// k.  No stabilization means the report stays inconclusive — never a
/// guess.  Supplied witness points are verified by exact evaluation on
/// every canonical basis element.
inline LocusReport
analyze_locus(const FormSpace<Rational>& v, int max_degree,
              const std::vector<std::vector<Rational>>& witnesses = {}) {
    const int n = v.num_vars();
    const int d = v.degree();
    if (max_degree < d)
        throw DegreeError("window ends below the generating degree");

    LocusReport report;
    report.num_vars = n;
    report.degree = d;
    report.max_degree = max_degree;
    for (int e = d; e <= max_degree; ++e) {
        const long long total =
            static_cast<long long>(monomial_count(n, e));
        report.quotient_values.push_back(total - ideal_piece(v, e).dim());
    }

    std::vector<long long> row = report.quotient_values;
    for (int order = 0; row.size() >= 2; ++order) {
        const std::size_t m = row.size();
        if (row[m - 1] == row[m - 2]) {
            const long long constant = row[m - 1];
            if (order == 0 && constant == 0) {
                report.kind = LocusKind::Empty;
                report.tail_value = 0;
            } else if (order == 0) {
                report.kind = LocusKind::ZeroDimensional;
                report.tail_value = constant;
                report.hp_degree = 0;
                report.codimension = n - 1;
            } else {
                report.kind = LocusKind::PositiveDimensional;
                report.hp_degree = order;
                report.codimension = (n - 1) - order;
            }
            break;
        }
        std::vector<long long> next;
        next.reserve(m - 1);
        for (std::size_t i = 1; i < m; ++i)
            next.push_back(row[i] - row[i - 1]);
        row = std::move(next);
    }

    if (!witnesses.empty()) {
        report.witnesses_checked = true;
        report.witness_points = witnesses;
        bool all_zero = true;
        const std::vector<Polynomial<Rational>> basis = v.basis_polynomials();
        for (const std::vector<Rational>& point : witnesses) {
            if (static_cast<int>(point.size()) != n)
                throw DimensionError("witness point of the wrong length");
            for (const Polynomial<Rational>& b : basis)
                if (!b.evaluate(point).is_zero()) {
                    all_zero = false;
                    break;
                }
            if (!all_zero)
                break;
        }
        report.witnesses_vanish = all_zero;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Main theorem pipeline (restriction depth 0 = part a, depth r ≥ 1 = part b).
// ---------------------------------------------------------------------------

struct MainTheoremReport {
    int restriction = 0;
    int degree = 0;
    int max_degree = 0;
    bool hypothesis_holds = false;
    /// Cross-check that the restricted staircase equals the staircase of
    /// the restricted space (trivially true at restriction 0).
    bool restriction_consistent = false;
    /// e → whether the observed staircase equals the constructed ideal's
    /// degree-e piece, for e in [degree, max_degree].
    std::map<int, bool> degree_matches;
    /// e → observed initial space of the restricted ideal piece.
    std::map<int, MonomialSpace> observed;
    MonomialIdeal j;
    MonomialSpace staircase;
    MonomialSpace restricted_staircase;
    bool all_match = false;
    bool verified = false;
    int trials = 0;
    std::uint64_t seed = 0;

    MainTheoremReport(MonomialIdeal j_, MonomialSpace staircase_,
                      MonomialSpace restricted_)
        : j(std::move(j_)), staircase(std::move(staircase_)),
          restricted_staircase(std::move(restricted_)) {}
};

/// Run the staircase-comparison pipeline: compute the generic initial space
/// (with a witness change placing V in general coordinates), restrict the
/// staircase and the space by the given depth, build the colon-and-restrict
/// ideal from the restricted staircase, and compare it degreewise against
/// the observed initial spaces of the restricted ideal pieces on the window
/// [d, max_degree].  The hypothesis is that the constructed ideal has no
/// minimal generator in degree d; comparisons are reported even when it
/// fails, for diagnosis.
inline MainTheoremReport
verify_main_theorem(const FormSpace<Rational>& v, int restriction,
                    int max_degree, int trials = 3, std::uint64_t seed = 1,
                    int range = 1000) {
    const int n = v.num_vars();
    const int d = v.degree();
    if (restriction < 0 || restriction > n - 2)
        throw PreconditionError("restriction depth out of range");
    if (max_degree < d)
        throw DegreeError("comparison window ends below the degree");

    const GinResult<Rational> g = gin(v, trials, seed, range);
    const FormSpace<Rational> moved = change_coordinates(v, g.change);
    const MonomialSpace t = restriction == 0
                                ? g.monomials
                                : g.monomials.restrict_top(restriction);
    const FormSpace<Rational> w =
        restriction == 0 ? moved : restrict(moved, restriction);

    ColonRestrictIdeal construction = build_J(t);

    MainTheoremReport report(std::move(construction.ideal), g.monomials, t);
    report.restriction = restriction;
    report.degree = d;
    report.max_degree = max_degree;
    report.trials = g.trials;
    report.seed = seed;
    report.restriction_consistent = initial_space(w) == t;
    report.hypothesis_holds = !has_generator_in_degree(report.j, d);

    bool all = true;
    for (int e = d; e <= max_degree; ++e) {
        MonomialSpace lhs = initial_space(restrict(ideal_piece(w, e), 1));
        const bool ok = lhs == report.j.piece(e);
        report.degree_matches.emplace(e, ok);
        report.observed.emplace(e, std::move(lhs));
        all = all && ok;
    }
    report.all_match = all;
    report.verified =
        report.hypothesis_holds && report.restriction_consistent && all;
    return report;
}

inline MainTheoremReport
verify_main_theorem_a(const FormSpace<Rational>& v, int max_degree,
                      int trials = 3, std::uint64_t seed = 1,
                      int range = 1000) {
    return verify_main_theorem(v, 0, max_degree, trials, seed, range);
}

inline MainTheoremReport
verify_main_theorem_b(const FormSpace<Rational>& v, int restriction,
                      int max_degree, int trials = 3, std::uint64_t seed = 1,
                      int range = 1000) {
    if (restriction < 1)
        throw PreconditionError("restriction depth must be at least 1");
    return verify_main_theorem(v, restriction, max_degree, trials, seed,
                               range);
}

// ---------------------------------------------------------------------------
// Corollary pipeline: codimension of the constructed ideal vs the locus.
// ---------------------------------------------------------------------------

struct CorollaryReport {
    int num_vars = 0;
    int degree = 0;
    bool hypothesis_holds = false;
    int j_codimension = -1;
    /// The codimension claim is only made when the no-generator hypothesis
    /// holds and the ideal's codimension is at most n−2.
    bool applies = false;
    LocusReport locus;
    bool codims_match = false;
    bool verified = false;
    MonomialIdeal j;
    MonomialSpace staircase;
    int trials = 0;
    std::uint64_t seed = 0;

    CorollaryReport(MonomialIdeal j_, MonomialSpace staircase_)
        : j(std::move(j_)), staircase(std::move(staircase_)) {}
};

/// Check the codimension claim: when the colon-and-restrict ideal built
/// from the generic staircase has no generator in degree d and codimension
/// c ≤ n−2, the vanishing locus of V must have codimension c.  The locus
/// side is read off the quotient Hilbert values on the window; a window too
/// short to stabilize leaves the comparison open.
inline CorollaryReport verify_corollary(const FormSpace<Rational>& v,
                                        int max_degree, int trials = 3,
                                        std::uint64_t seed = 1,
                                        int range = 1000) {
    const int n = v.num_vars();
    const int d = v.degree();
    if (max_degree < d)
        throw DegreeError("window ends below the degree");

    const GinResult<Rational> g = gin(v, trials, seed, range);
    ColonRestrictIdeal construction = build_J(g.monomials);

    CorollaryReport report(std::move(construction.ideal), g.monomials);
    report.num_vars = n;
    report.degree = d;
    report.trials = g.trials;
    report.seed = seed;
    report.hypothesis_holds = !has_generator_in_degree(report.j, d);
    report.j_codimension = codimension(report.j);
    report.applies =
        report.hypothesis_holds && report.j_codimension <= n - 2;
    report.locus = analyze_locus(v, max_degree);
    report.codims_match =
        (report.locus.kind == LocusKind::PositiveDimensional ||
         report.locus.kind == LocusKind::ZeroDimensional) &&
        report.locus.codimension == report.j_codimension;
    report.verified = report.applies && report.codims_match;
    return report;
}

// ---------------------------------------------------------------------------
// The three bundled example spaces and their verification suite.
// ---------------------------------------------------------------------------

namespace detail {

inline Monomial mono3(int a, int b, int c) {
    return Monomial(std::vector<int>{a, b, c});
}

inline Polynomial<Rational>
poly3(const std::vector<std::pair<int, Monomial>>& terms) {
    Polynomial<Rational> p(3);
    for (const auto& [coeff, m] : terms)
        p.add_term(Rational(coeff), m);
    return p;
}

} // namespace detail

inline Polynomial<Rational> default_example_quadric() {
    using detail::mono3;
    return detail::poly3(
        {{1, mono3(2, 0, 0)}, {1, mono3(0, 2, 0)}, {1, mono3(0, 0, 2)}});
}

inline Polynomial<Rational> default_example_cubic() {
    return detail::poly3({{1, detail::mono3(3, 0, 0)}});
}

/// Case a: ⟨x1·q, x2·q, x3·q, p⟩ for a quadric q and a cubic p not
/// divisible by q.
inline std::vector<Polynomial<Rational>>
example_case_a_generators(const Polynomial<Rational>& q,
                          const Polynomial<Rational>& p) {
    if (q.num_vars() != 3 || p.num_vars() != 3)
        throw DimensionError("case a lives in three variables");
    if (q.is_zero() || p.is_zero())
        throw EmptyInputError("case a needs nonzero forms");
    if (q.degree() != 2)
        throw DegreeError("case a needs a quadric");
    if (p.degree() != 3)
        throw DegreeError("case a needs a cubic");
    if (exact_divide(p, q))
        throw PreconditionError("the cubic must not be divisible by the "
                                "quadric");
    std::vector<Polynomial<Rational>> gens;
    for (int i = 1; i <= 3; ++i)
        gens.push_back(q * Polynomial<Rational>::variable(3, i));
    gens.push_back(p);
    return gens;
}

/// Case b: ⟨x1(x2²+x3²), x2(x1²+x3²), x3(x1²+x2²), x1x2x3⟩.
inline std::vector<Polynomial<Rational>> example_case_b_generators() {
    using detail::mono3;
    using detail::poly3;
    return {
        poly3({{1, mono3(1, 2, 0)}, {1, mono3(1, 0, 2)}}),
        poly3({{1, mono3(2, 1, 0)}, {1, mono3(0, 1, 2)}}),
        poly3({{1, mono3(2, 0, 1)}, {1, mono3(0, 2, 1)}}),
        poly3({{1, mono3(1, 1, 1)}}),
    };
}

/// Case c: ⟨x1³+x2³+x3³, x1²x2+x2²x3+x3²x1, x1x2²+x2x3²+x3x1², x1x2x3⟩.
inline std::vector<Polynomial<Rational>> example_case_c_generators() {
    using detail::mono3;
    using detail::poly3;
    return {
        poly3({{1, mono3(3, 0, 0)}, {1, mono3(0, 3, 0)}, {1, mono3(0, 0, 3)}}),
        poly3({{1, mono3(2, 1, 0)}, {1, mono3(0, 2, 1)}, {1, mono3(1, 0, 2)}}),
        poly3({{1, mono3(1, 2, 0)}, {1, mono3(0, 1, 2)}, {1, mono3(2, 0, 1)}}),
        poly3({{1, mono3(1, 1, 1)}}),
    };
}

/// The staircase all three cases share: the degree-3 piece of the smallest
/// strongly stable ideal containing x1²x3 and x1x2².
inline MonomialSpace example_expected_staircase() {
    using detail::mono3;
    return borel_closure({mono3(2, 0, 1), mono3(1, 2, 0)}).piece(3);
}

/// The six bilinear coefficient forms reconstructing case b: expand
/// (t1·x2x3 + t2·x1x3 + t3·x1x2)(t1x1 + t2x2 + t3x3) in k[x;t] and collect
/// the coefficients of the t-monomials.
inline std::vector<Polynomial<Rational>> case_b_reconstruction_forms() {
    auto mono6 = [](std::initializer_list<int> exps) {
        return Monomial(std::vector<int>(exps));
    };
    Polynomial<Rational> p(6);
    p.add_term(Rational(1), mono6({0, 1, 1, 1, 0, 0}));
    p.add_term(Rational(1), mono6({1, 0, 1, 0, 1, 0}));
    p.add_term(Rational(1), mono6({1, 1, 0, 0, 0, 1}));
    Polynomial<Rational> h(6);
    h.add_term(Rational(1), mono6({1, 0, 0, 1, 0, 0}));
    h.add_term(Rational(1), mono6({0, 1, 0, 0, 1, 0}));
    h.add_term(Rational(1), mono6({0, 0, 1, 0, 0, 1}));
    std::vector<Polynomial<Rational>> forms;
    for (auto& [t_monomial, coefficient] : expand_t_coefficients(p * h, 3))
        forms.push_back(std::move(coefficient));
    return forms;
}

/// Case c the same way: expand (t1x2+t2x3+t3x1)(t1x3+t2x1+t3x2)·h with
/// h = t1x1+t2x2+t3x3 and collect the t-coefficients.
inline std::vector<Polynomial<Rational>> case_c_reconstruction_forms() {
    auto mono6 = [](std::initializer_list<int> exps) {
        return Monomial(std::vector<int>(exps));
    };
    Polynomial<Rational> first(6);
    first.add_term(Rational(1), mono6({0, 1, 0, 1, 0, 0}));
    first.add_term(Rational(1), mono6({0, 0, 1, 0, 1, 0}));
    first.add_term(Rational(1), mono6({1, 0, 0, 0, 0, 1}));
    Polynomial<Rational> second(6);
    second.add_term(Rational(1), mono6({0, 0, 1, 1, 0, 0}));
    second.add_term(Rational(1), mono6({1, 0, 0, 0, 1, 0}));
    second.add_term(Rational(1), mono6({0, 1, 0, 0, 0, 1}));
    Polynomial<Rational> h(6);
    h.add_term(Rational(1), mono6({1, 0, 0, 1, 0, 0}));
    h.add_term(Rational(1), mono6({0, 1, 0, 0, 1, 0}));
    h.add_term(Rational(1), mono6({0, 0, 1, 0, 0, 1}));
    std::vector<Polynomial<Rational>> forms;
    for (auto& [t_monomial, coefficient] :
         expand_t_coefficients(first * second * h, 3))
        forms.push_back(std::move(coefficient));
    return forms;
}

struct ExampleCaseReport {
    std::string name;
    int dimension = 0;
    bool dimension_ok = false;
    MonomialSpace staircase;
    bool gin_matches = false;
    LocusReport locus;
    bool locus_as_expected = false;
    bool witnesses_checked = false;
    bool witnesses_vanish = false;
    bool pass = false;

    explicit ExampleCaseReport(std::string name_, MonomialSpace staircase_)
        : name(std::move(name_)), staircase(std::move(staircase_)) {}
};

struct ExampleSuiteReport {
    std::vector<ExampleCaseReport> cases;
    /// Case b rebuilt from the six bilinear coefficient forms: their span
    /// must be four-dimensional and equal to case b's space.
    int reconstruction_b_dim = 0;
    bool reconstruction_b_matches = false;
    /// Case c rebuilt from the quadratic-parameter expansion.
    int reconstruction_c_dim = 0;
    bool reconstruction_c_matches = false;
    bool all_pass = false;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Run the bundled example suite: instantiate the three spaces (case a with
/// configurable quadric and cubic), check each has dimension 4 and the
/// shared generic staircase, analyze each vanishing locus (three points
/// with unit-vector witnesses for b, empty for c, a six-point complete
/// intersection for a when the chosen forms are coprime), and rebuild
/// cases b and c from their parameter expansions.
inline ExampleSuiteReport
verify_examples_2_6(int trials = 3, std::uint64_t seed = 1, int range = 1000,
                    int max_degree = 8,
                    const std::optional<Polynomial<Rational>>& quadric = {},
                    const std::optional<Polynomial<Rational>>& cubic = {}) {
    const Polynomial<Rational> q =
        quadric ? *quadric : default_example_quadric();
    const Polynomial<Rational> p = cubic ? *cubic : default_example_cubic();

    ExampleSuiteReport suite;
    suite.trials = trials;
    suite.seed = seed;

    const MonomialSpace expected = example_expected_staircase();
    const std::vector<std::vector<Rational>> unit_points = {
        {Rational(1), Rational(0), Rational(0)},
        {Rational(0), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1)},
    };

    struct CaseInput {
        std::string name;
        std::vector<Polynomial<Rational>> generators;
        std::vector<std::vector<Rational>> witnesses;
        long long expected_tail; // −1: expect positive-dimensional (unused)
    };
    const std::vector<CaseInput> inputs = {
        {"a", example_case_a_generators(q, p), {}, 6},
        {"b", example_case_b_generators(), unit_points, 3},
        {"c", example_case_c_generators(), {}, 0},
    };

    bool all = true;
    std::uint64_t case_index = 0;
    for (const CaseInput& input : inputs) {
        const FormSpace<Rational> v(3, 3, input.generators);
        const std::uint64_t case_seed = derive_seed(seed, case_index++);
        const GinResult<Rational> g = gin(v, trials, case_seed, range);

        ExampleCaseReport item(input.name, g.monomials);
        item.dimension = v.dim();
        item.dimension_ok = v.dim() == 4;
        item.gin_matches = g.monomials == expected;
        item.locus = analyze_locus(v, max_degree, input.witnesses);
        if (input.expected_tail == 0)
            item.locus_as_expected = item.locus.kind == LocusKind::Empty;
        else
            item.locus_as_expected =
                item.locus.kind == LocusKind::ZeroDimensional &&
                item.locus.tail_value == input.expected_tail;
        item.witnesses_checked = item.locus.witnesses_checked;
        item.witnesses_vanish = item.locus.witnesses_vanish;
        item.pass = item.dimension_ok && item.gin_matches &&
                    item.locus_as_expected &&
                    (!item.witnesses_checked || item.witnesses_vanish);
        all = all && item.pass;
        suite.cases.push_back(std::move(item));
    }

    const FormSpace<Rational> case_b(3, 3, example_case_b_generators());
    const FormSpace<Rational> rebuilt_b(3, 3, case_b_reconstruction_forms());
    suite.reconstruction_b_dim = rebuilt_b.dim();
    suite.reconstruction_b_matches =
        rebuilt_b.dim() == 4 && rebuilt_b == case_b;

    const FormSpace<Rational> case_c(3, 3, example_case_c_generators());
    const FormSpace<Rational> rebuilt_c(3, 3, case_c_reconstruction_forms());
    suite.reconstruction_c_dim = rebuilt_c.dim();
    suite.reconstruction_c_matches =
        rebuilt_c.dim() == 4 && rebuilt_c == case_c;

    suite.all_pass =
        all && suite.reconstruction_b_matches && suite.reconstruction_c_matches;
    return suite;
}

// ---------------------------------------------------------------------------
// Degree-4 exploration: colon staircases and double-colon observations.
// ---------------------------------------------------------------------------

struct ColonExplorationReport {
    MonomialSpace staircase;       // gin of the space
    MonomialSpace colon_staircase; // initial space of V : x3
    int colon_square_dim = 0;
    int colon_pair_dim = 0;
    bool colon_square_nonzero = false;
    bool colon_pair_nonzero = false;
    int trials = 0;
    std::uint64_t seed = 0;

    ColonExplorationReport(MonomialSpace staircase_, MonomialSpace colon_)
        : staircase(std::move(staircase_)),
          colon_staircase(std::move(colon_)) {}
};

/// The default seven-dimensional quartic example: p·S_2 + ⟨q⟩ for a random
/// quadric p and quartic q, placed in general coordinates.  Redraws if the
/// quartic accidentally lands inside p·S_2.
inline FormSpace<Rational> default_quartic_example(std::uint64_t seed,
                                                   int range = 1000) {
    for (std::uint64_t attempt = 0; attempt < 10; ++attempt) {
        SplitMix64 rng(derive_seed(seed, 1000 + attempt));
        const Polynomial<Rational> p = random_form<Rational>(3, 2, rng, range);
        const Polynomial<Rational> q = random_form<Rational>(3, 4, rng, range);
        const FormSpace<Rational> base =
            multiply(FormSpace<Rational>::full(3, 2), p);
        const FormSpace<Rational> v =
            sum(base, FormSpace<Rational>(3, 4, {q}));
        if (v.dim() != 7)
            continue;
        return generify(v, derive_seed(seed, 2000 + attempt), range).first;
    }
    throw RandomnessError("could not build a seven-dimensional example");
}

/// Observe the open-question statistics on a seven-dimensional quartic
/// space in general coordinates: the staircase of V : x3, whether V : h²
/// is nonzero for a generic linear h, and whether V : h1h2 is nonzero for
/// independent generic linear forms.  No equivalence between the two colon
/// conditions is asserted.
inline ColonExplorationReport
explore_example_2_7(const FormSpace<Rational>& v, int trials = 3,
                    std::uint64_t seed = 1, int range = 1000) {
    if (v.num_vars() != 3)
        throw PreconditionError("the exploration lives in three variables");
    if (v.degree() != 4)
        throw PreconditionError("the exploration needs degree 4");
    if (v.dim() != 7)
        throw PreconditionError("the exploration needs a seven-dimensional "
                                "space");

    const GinResult<Rational> g = gin(v, trials, seed, range);
    const MonomialSpace colon_staircase =
        initial_space(colon_monomial(v, Monomial::variable(3, 3)));

    ColonExplorationReport report(g.monomials, colon_staircase);
    report.trials = g.trials;
    report.seed = seed;

    SplitMix64 rng(derive_seed(seed, 7));
    const Polynomial<Rational> h = random_form<Rational>(3, 1, rng, range);
    const FormSpace<Rational> square = colon_form(colon_form(v, h), h);
    report.colon_square_dim = square.dim();
    report.colon_square_nonzero = square.dim() > 0;

    const Polynomial<Rational> h1 = random_form<Rational>(3, 1, rng, range);
    const Polynomial<Rational> h2 = random_form<Rational>(3, 1, rng, range);
    const FormSpace<Rational> pair = colon_form(colon_form(v, h1), h2);
    report.colon_pair_dim = pair.dim();
    report.colon_pair_nonzero = pair.dim() > 0;
    return report;
}

// ---------------------------------------------------------------------------
// Common-factor scenario: product spaces recover their factor.
// ---------------------------------------------------------------------------

struct CommonFactorScenarioReport {
    int factor_degree = 0;
    int block_degree = 0;
    int block_vars = 0;
    int num_vars = 0;
    int dimension = 0;
    MonomialSpace staircase;
    MonomialSpace expected;
    bool gin_matches = false;
    bool factor_confirmed = false;
    bool verified = false;
    int trials = 0;
    std::uint64_t seed = 0;

    CommonFactorScenarioReport(MonomialSpace staircase_,
                               MonomialSpace expected_)
        : staircase(std::move(staircase_)), expected(std::move(expected_)) {}
};

/// Build V = p·g(span of degree-b monomials in x1..xm) for a random
/// degree-a form p and a random coordinate change g, then confirm the
/// generic staircase is exactly x1^a times the degree-b monomials of the
/// block and that p divides every canonical basis element.
inline CommonFactorScenarioReport
scenario_theorem_1(int a, int b, int m, int n, std::uint64_t seed,
                   int trials = 3, int range = 1000, int degree_cap = 6) {
    if (m < 3)
        throw PreconditionError("the block needs at least three variables");
    if (m > n)
        throw PreconditionError("block variables exceed the ring");
    if (a < 1 || b < 1)
        throw PreconditionError("degrees must be positive");
    if (a + b > degree_cap)
        throw SizeError("total degree exceeds the configured cap of " +
                        std::to_string(degree_cap));

    SplitMix64 rng(derive_seed(seed, 11));
    const Polynomial<Rational> p = random_form<Rational>(n, a, rng, range);

    std::vector<Polynomial<Rational>> block;
    std::vector<Monomial> expected_monomials;
    for (const Monomial& u : monomials_of_degree(m, b)) {
        std::vector<int> exps = u.exponents();
        exps.resize(static_cast<std::size_t>(n), 0);
        block.push_back(
            Polynomial<Rational>::from_term(Rational(1), Monomial(exps)));
        exps[0] += a;
        expected_monomials.push_back(Monomial(exps));
    }
    const FormSpace<Rational> w(n, b, block);
    const LinearChange<Rational> g =
        random_change<Rational>(n, derive_seed(seed, 12), range);
    const FormSpace<Rational> v = multiply(change_coordinates(w, g), p);

    const GinResult<Rational> result =
        gin(v, trials, derive_seed(seed, 13), range);

    CommonFactorScenarioReport report(
        result.monomials, MonomialSpace(n, a + b, expected_monomials));
    report.factor_degree = a;
    report.block_degree = b;
    report.block_vars = m;
    report.num_vars = n;
    report.dimension = v.dim();
    report.gin_matches = report.staircase == report.expected;
    report.factor_confirmed = verify_common_factor(v, p);
    report.verified = report.gin_matches && report.factor_confirmed;
    report.trials = result.trials;
    report.seed = seed;
    return report;
}

} // namespace ginspace
