#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ginspace {

/// A monomial in variables x1..xn, stored as an exponent vector with the
/// total degree cached.  Variable indices are 1-based throughout the library,
/// matching the usual mathematical notation.
class Monomial {
  public:
    explicit Monomial(std::vector<int> exponents)
        : exponents_(std::move(exponents)) {
        for (int e : exponents_)
            if (e < 0)
                throw IndexError("negative exponent in monomial");
        degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
    }

    /// The unit monomial 1 in n variables.
    static Monomial one(int num_vars) {
        if (num_vars < 1)
            throw DimensionError("monomial needs at least one variable");
        return Monomial(std::vector<int>(num_vars, 0));
    }

    /// The variable x_i (1-based) in n variables.
    static Monomial variable(int num_vars, int i) {
        Monomial m = one(num_vars);
        m.check_var(i);
        m.exponents_[i - 1] = 1;
        m.degree_ = 1;
        return m;
    }

    int num_vars() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }

    /// Exponent of x_i, 1-based.
    int exponent(int i) const {
        check_var(i);
        return exponents_[i - 1];
    }

    const std::vector<int>& exponents() const { return exponents_; }

    bool is_one() const { return degree_ == 0; }

    /// Largest i with x_i | m; 0 for the unit monomial.
    int max_var() const {
        for (int i = num_vars(); i >= 1; --i)
            if (exponents_[i - 1] > 0)
                return i;
        return 0;
    }

    /// Smallest i with x_i | m; 0 for the unit monomial.
    int min_var() const {
        for (int i = 1; i <= num_vars(); ++i)
            if (exponents_[i - 1] > 0)
                return i;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check_same_ring(b);
        std::vector<int> e(a.exponents_);
        for (int i = 0; i < b.num_vars(); ++i)
            e[i] += b.exponents_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& other) const {
        check_same_ring(other);
        for (int i = 0; i < num_vars(); ++i)
            if (exponents_[i] > other.exponents_[i])
                return false;
        return true;
    }

    /// other / *this, or nullopt when *this does not divide other.
    std::optional<Monomial> try_divide_into(const Monomial& other) const {
        check_same_ring(other);
        std::vector<int> e(other.exponents_);
        for (int i = 0; i < num_vars(); ++i) {
            e[i] -= exponents_[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        return Monomial(std::move(e));
    }

    /// m * x_i / x_j; requires x_j | m.
    Monomial exchange(int i, int j) const {
        check_var(i);
        check_var(j);
        if (exponents_[j - 1] == 0)
            throw PreconditionError("exchange: monomial not divisible by x" +
                                    std::to_string(j));
        std::vector<int> e(exponents_);
        --e[j - 1];
        ++e[i - 1];
        return Monomial(std::move(e));
    }

    /// The monomial with variable r deleted (ring drops to n-1 variables,
    /// remaining variables keep their relative order).  Requires exp(r) == 0.
    Monomial drop_var(int r) const {
        check_var(r);
        if (num_vars() < 2)
            throw DimensionError("cannot drop the only variable");
        if (exponents_[r - 1] != 0)
            throw PreconditionError(
                "drop_var: monomial depends on the dropped variable");
        std::vector<int> e;
        e.reserve(exponents_.size() - 1);
        for (int i = 0; i < num_vars(); ++i)
            if (i != r - 1)
                e.push_back(exponents_[i]);
        return Monomial(std::move(e));
    }

    /// Inverse of drop_var: re-insert variable r with exponent e.
    Monomial insert_var(int r, int e) const {
        if (r < 1 || r > num_vars() + 1)
            throw IndexError("insert_var: position out of range");
        if (e < 0)
            throw IndexError("insert_var: negative exponent");
        std::vector<int> ex;
        ex.reserve(exponents_.size() + 1);
        for (int i = 0; i < r - 1; ++i)
            ex.push_back(exponents_[i]);
        ex.push_back(e);
        for (int i = r - 1; i < num_vars(); ++i)
            ex.push_back(exponents_[i]);
        return Monomial(std::move(ex));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }

    /// "x1^2*x2", "1" for the unit monomial.
    std::string to_string() const {
        if (is_one())
            return "1";
        std::string out;
        for (int i = 1; i <= num_vars(); ++i) {
            const int e = exponents_[i - 1];
            if (e == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += 'x';
            out += std::to_string(i);
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out;
    }

  private:
    void check_var(int i) const {
        if (i < 1 || i > num_vars())
            throw IndexError("variable index x" + std::to_string(i) +
                             " out of range for " + std::to_string(num_vars()) +
                             " variables");
    }
    void check_same_ring(const Monomial& other) const {
        if (num_vars() != other.num_vars())
            throw DimensionError("monomials live in different rings");
    }

    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Degree-reverse-lexicographic comparison.  `a` is larger when its degree is
/// smaller, or degrees agree and at the *largest* index where the exponent
/// vectors differ `a` has the *smaller* exponent.  Among monomials of one
/// degree this is the classical revlex order: powers of x1 are largest and
/// anything involving only late variables sorts high only when it avoids them.
inline std::strong_ordering revlex_compare(const Monomial& a,
                                           const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw DimensionError("revlex_compare: different rings");
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
    for (int i = a.num_vars(); i >= 1; --i) {
        const int ea = a.exponent(i);
        const int eb = b.exponent(i);
        if (ea != eb)
            return ea < eb ? std::strong_ordering::greater
                           : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

/// Strict "larger in revlex" predicate; sorts containers descending, i.e.
/// largest monomial first, which is the column order used for matrices.
struct RevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return revlex_compare(a, b) == std::strong_ordering::greater;
    }
};

/// Number of monomials of degree d in n variables: C(d+n-1, n-1).
inline std::uint64_t monomial_count(int num_vars, int degree) {
    if (num_vars < 1 || degree < 0)
        throw DimensionError("monomial_count: bad arguments");
    std::uint64_t result = 1;
    for (int i = 1; i <= num_vars - 1; ++i) {
        result *= static_cast<std::uint64_t>(degree + i);
        result /= static_cast<std::uint64_t>(i);
    }
    return result;
}

namespace detail {
inline void enumerate_exponents(int remaining_vars, int remaining_degree,
                                std::vector<int>& prefix,
                                std::vector<Monomial>& out) {
    if (remaining_vars == 1) {
        prefix.push_back(remaining_degree);
        out.push_back(Monomial(prefix));
        prefix.pop_back();
        return;
    }
    for (int e = remaining_degree; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_exponents(remaining_vars - 1, remaining_degree - e, prefix,
                            out);
        prefix.pop_back();
    }
}
} // namespace detail

/// All monomials of the given degree, in revlex-descending order (the order
/// in which matrix columns are laid out everywhere in this library).
inline std::vector<Monomial> monomials_of_degree(int num_vars, int degree) {
    if (num_vars < 1)
        throw DimensionError("monomials_of_degree: need at least one variable");
    if (degree < 0)
        throw DimensionError("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    out.reserve(monomial_count(num_vars, degree));
    std::vector<int> prefix;
    detail::enumerate_exponents(num_vars, degree, prefix, out);
    std::sort(out.begin(), out.end(), RevlexGreater{});
    return out;
}

} // namespace ginspace
