#pragma once

// Shared test helpers: seeded random generators for property tests and an
// independent degreewise rank oracle.  The oracle deliberately avoids the
// library's elimination, ordering, and polynomial arithmetic: columns are
// indexed by raw exponent vectors, multiplication is exponent addition,
// and the rank comes from fraction-free Bareiss elimination over integers.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "ginspace/form_space.hpp"
#include "ginspace/gin.hpp"
#include "ginspace/monomial_ideal.hpp"
#include "ginspace/prng.hpp"

namespace testhelp {

using namespace ginspace;

/// A random space spanned by `count` random forms (its dimension may end
/// up lower if draws collide, which is fine for property tests).
inline FormSpace<Rational> random_space(int n, int d, int count,
                                        std::uint64_t seed,
                                        int range = 50) {
    SplitMix64 rng(seed);
    std::vector<Polynomial<Rational>> forms;
    for (int i = 0; i < count; ++i)
        forms.push_back(random_form<Rational>(n, d, rng, range));
    return FormSpace<Rational>(n, d, forms);
}

/// A random monomial of the given degree.
inline Monomial random_monomial(int n, int d, SplitMix64& rng) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < d; ++i)
        ++exps[static_cast<std::size_t>(rng.between(0, n - 1))];
    return Monomial(exps);
}

/// A random strongly stable ideal: the Borel closure of a few random
/// monomials of degree at most `max_gen_degree`.
inline MonomialIdeal random_stable_ideal(int n, int max_gen_degree,
                                         int count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) {
        const int d =
            static_cast<int>(rng.between(1, max_gen_degree));
        gens.push_back(random_monomial(n, d, rng));
    }
    return borel_closure(gens);
}

// ------------------------------------------------ independent rank oracle

/// All exponent vectors of the given total degree, enumerated directly.
inline void enumerate_compositions(int vars, int degree,
                                   std::vector<int>& prefix,
                                   std::vector<std::vector<int>>& out) {
    if (vars == 1) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        prefix.push_back(e);
        enumerate_compositions(vars - 1, degree - e, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> compositions(int vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    enumerate_compositions(vars, degree, prefix, out);
    return out;
}

/// Rank by fraction-free Bareiss elimination with full pivoting.
inline int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty())
        return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    mpz_class prev = 1;
    int step = 0;
    while (step < rows && step < cols) {
        int pr = -1, pc = -1;
        for (int i = step; i < rows && pr < 0; ++i)
            for (int j = step; j < cols; ++j)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0)
            break;
        std::swap(m[step], m[pr]);
        if (pc != step)
            for (int i = 0; i < rows; ++i)
                std::swap(m[i][step], m[i][pc]);
        for (int r = step + 1; r < rows; ++r) {
            for (int c = step + 1; c < cols; ++c) {
                mpz_class num =
                    m[step][step] * m[r][c] - m[r][step] * m[step][c];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
                m[r][c] = q;
            }
            m[r][step] = 0;
        }
        prev = m[step][step];
        ++step;
    }
    return step;
}

/// dim of S_e / (ideal generated by the forms)_e, computed independently:
/// rows are exponent-shifted copies of each generator over a raw exponent
/// column map, integerized per row, ranked by Bareiss.
inline long long quotient_dim_independent(
    const std::vector<Polynomial<Rational>>& gens, int n, int d, int e) {
    const std::vector<std::vector<int>> columns = compositions(n, e);
    std::map<std::vector<int>, int> column_of;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j)
        column_of[columns[static_cast<std::size_t>(j)]] = j;

    std::vector<std::vector<mpz_class>> rows;
    for (const Polynomial<Rational>& g : gens) {
        for (const std::vector<int>& shift : compositions(n, e - d)) {
            // Row of g * x^shift as rationals over the raw column map.
            std::vector<mpq_class> row(columns.size(), mpq_class(0));
            for (const auto& [mono, coeff] : g.terms()) {
                std::vector<int> exps = mono.exponents();
                for (int i = 0; i < n; ++i)
                    exps[static_cast<std::size_t>(i)] +=
                        shift[static_cast<std::size_t>(i)];
                row[static_cast<std::size_t>(column_of.at(exps))] +=
                    mpq_class(coeff.to_string());
            }
            // Clear denominators (scaling a row keeps the rank).
            mpz_class lcm = 1;
            for (const mpq_class& v : row)
                if (v != 0)
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                            v.get_den().get_mpz_t());
            std::vector<mpz_class> irow;
            irow.reserve(row.size());
            for (const mpq_class& v : row) {
                mpq_class scaled = v * mpq_class(lcm);
                irow.push_back(scaled.get_num());
            }
            rows.push_back(std::move(irow));
        }
    }
    return static_cast<long long>(columns.size()) - bareiss_rank(rows);
}

} // namespace testhelp
