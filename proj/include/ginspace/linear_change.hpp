#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "exact_matrix.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "prng.hpp"
#include "scalar.hpp"

namespace ginspace {

/// An invertible change of coordinates: x_i ↦ Σ_j m[i][j]·x_j.  The inverse
/// is computed eagerly and checked by multiplying back to the identity, so a
/// constructed LinearChange is always genuinely invertible.
template <ExactField F>
class LinearChange {
  public:
    explicit LinearChange(ExactMatrix<F> m)
        : matrix_(std::move(m)), inverse_(0, 0) {
        const int n = matrix_.rows();
        if (n != matrix_.cols() || n < 1)
            throw DimensionError("coordinate change must be square");
        auto r = reduced_row_echelon(hstack(matrix_, ExactMatrix<F>::identity(n)));
        if (r.rank() < n)
            throw InvalidChangeError("coordinate change is singular");
        inverse_ = right_block_of_zero_left_rows_inverse(r.matrix, n);
        if (matmul(matrix_, inverse_) != ExactMatrix<F>::identity(n))
            throw InvalidChangeError("inverse verification failed");
    }

    static LinearChange identity(int n) {
        return LinearChange(ExactMatrix<F>::identity(n));
    }

    int num_vars() const { return matrix_.rows(); }
    const ExactMatrix<F>& matrix() const { return matrix_; }
    const ExactMatrix<F>& inverse_matrix() const { return inverse_; }

    LinearChange inverse() const {
        LinearChange out = *this;
        std::swap(out.matrix_, out.inverse_);
        return out;
    }

    /// The linear form that variable i (1-based) maps to.
    Polynomial<F> image_of_variable(int i) const {
        const int n = num_vars();
        if (i < 1 || i > n)
            throw IndexError("variable index out of range");
        Polynomial<F> out(n);
        for (int j = 1; j <= n; ++j)
            out.add_term(matrix_.at(i - 1, j - 1),
                         Monomial::variable(n, j));
        return out;
    }

    /// Substitute every variable by its image; exact expansion.
    Polynomial<F> apply(const Polynomial<F>& p) const {
        const int n = num_vars();
        if (p.num_vars() != n)
            throw DimensionError("polynomial from a different ring");
        if (p.is_zero())
            return p;

        // Power tables per variable, up to the largest exponent in p.
        std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
        for (const auto& [m, c] : p.terms())
            for (int i = 1; i <= n; ++i)
                max_exp[i - 1] = std::max(max_exp[i - 1], m.exponent(i));
        std::vector<std::vector<Polynomial<F>>> powers;
        powers.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            std::vector<Polynomial<F>> tower;
            tower.push_back(Polynomial<F>::from_term(F(1), Monomial::one(n)));
            if (max_exp[i - 1] > 0) {
                const Polynomial<F> img = image_of_variable(i);
                for (int e = 1; e <= max_exp[i - 1]; ++e)
                    tower.push_back(tower.back() * img);
            }
            powers.push_back(std::move(tower));
        }

        Polynomial<F> out(n);
        for (const auto& [m, c] : p.terms()) {
            Polynomial<F> prod =
                Polynomial<F>::from_term(c, Monomial::one(n));
            for (int i = 1; i <= n; ++i)
                if (m.exponent(i) > 0)
                    prod = prod * powers[i - 1][m.exponent(i)];
            out += prod;
        }
        return out;
    }

  private:
    // Extract the right block of a full-rank [M | I] rref — this is M⁻¹.
    static ExactMatrix<F> right_block_of_zero_left_rows_inverse(
        const ExactMatrix<F>& rrefed, int n) {
        ExactMatrix<F> out(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out.at(i, j) = rrefed.at(i, n + j);
        return out;
    }

    ExactMatrix<F> matrix_;
    ExactMatrix<F> inverse_;
};

template <ExactField F>
Polynomial<F> substitute_linear(const Polynomial<F>& p,
                                const LinearChange<F>& g) {
    return g.apply(p);
}

/// Deterministic random invertible change: entries uniform on the integers
/// in [−range, range], resampled until invertible.
template <ExactField F>
LinearChange<F> random_change(int n, std::uint64_t seed, std::int64_t range) {
    if (range < 2)
        throw PreconditionError("coefficient range must be at least 2");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        ExactMatrix<F> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = F(static_cast<long long>(
                    rng.between(-range, range)));
        if (rank(m) < n)
            continue;
        return LinearChange<F>(std::move(m));
    }
    throw RandomnessError("no invertible change found in 100 attempts");
}

} // namespace ginspace
