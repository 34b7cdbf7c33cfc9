#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "scalar.hpp"

namespace ginspace {

/// Sparse homogeneous polynomial: a map from monomials to nonzero scalars,
/// kept in revlex-descending order so the leading term is always the first
/// entry.  Homogeneity is enforced on every insertion — inhomogeneous sums
/// are a bug somewhere upstream, not a state this type can hold.
template <ExactField F>
class Polynomial {
  public:
    using TermMap = std::map<Monomial, F, RevlexGreater>;

    explicit Polynomial(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1)
            throw DimensionError("polynomial needs at least one variable");
    }

    static Polynomial from_term(const F& c, const Monomial& m) {
        Polynomial p(m.num_vars());
        p.add_term(c, m);
        return p;
    }

    /// The variable x_i as a polynomial.
    static Polynomial variable(int num_vars, int i) {
        return from_term(F(1), Monomial::variable(num_vars, i));
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (is_zero())
            throw EmptyInputError("degree of the zero polynomial");
        return terms_.begin()->first.degree();
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    F coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? F(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (is_zero())
            throw EmptyInputError("leading monomial of the zero polynomial");
        return terms_.begin()->first;
    }

    const F& leading_coefficient() const {
        if (is_zero())
            throw EmptyInputError(
                "leading coefficient of the zero polynomial");
        return terms_.begin()->second;
    }

    /// Accumulate c·m; drops the term if the sum cancels.
    void add_term(const F& c, const Monomial& m) {
        if (m.num_vars() != num_vars_)
            throw DimensionError("term from a different ring");
        if (c.is_zero())
            return;
        if (!terms_.empty() && m.degree() != degree())
            throw DegreeError("inhomogeneous sum: degree " +
                              std::to_string(m.degree()) + " term added to a "
                              "degree-" + std::to_string(degree()) +
                              " polynomial");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial out(num_vars_);
        for (const auto& [m, c] : terms_)
            out.terms_.emplace(m, -c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_)
            add_term(c, m);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_)
            add_term(-c, m);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        return a -= b;
    }

    friend Polynomial operator*(const F& c, const Polynomial& p) {
        Polynomial out(p.num_vars_);
        if (c.is_zero())
            return out;
        for (const auto& [m, coeff] : p.terms_)
            out.terms_.emplace(m, c * coeff);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial out(a.num_vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ca * cb, ma * mb);
        return out;
    }

    /// Multiply by a single monomial (cheap shift of the support).
    Polynomial times_monomial(const Monomial& m) const {
        if (m.num_vars() != num_vars_)
            throw DimensionError("monomial from a different ring");
        Polynomial out(num_vars_);
        for (const auto& [mono, c] : terms_)
            out.terms_.emplace(mono * m, c);
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    F evaluate(const std::vector<F>& point) const {
        if (static_cast<int>(point.size()) != num_vars_)
            throw DimensionError("evaluation point has wrong length");
        F total(0);
        for (const auto& [m, c] : terms_) {
            F v = c;
            for (int i = 1; i <= num_vars_; ++i)
                for (int e = 0; e < m.exponent(i); ++e)
                    v *= point[i - 1];
            total += v;
        }
        return total;
    }

    /// Set variable r to zero and renumber the survivors: the image in the
    /// ring with one variable fewer.
    Polynomial restrict_var(int r) const {
        if (num_vars_ < 2)
            throw DimensionError("cannot restrict the last variable away");
        Polynomial out(num_vars_ - 1);
        for (const auto& [m, c] : terms_)
            if (m.exponent(r) == 0)
                out.add_term(c, m.drop_var(r));
        return out;
    }

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            F mag = c;
            if (c.sign() < 0) {
                out += first ? "-" : " - ";
                mag = -c;
            } else if (!first) {
                out += " + ";
            }
            if (mag.is_one() && !m.is_one())
                out += m.to_string();
            else if (m.is_one())
                out += mag.to_string();
            else
                out += mag.to_string() + "*" + m.to_string();
            first = false;
        }
        return out;
    }

  private:
    void check_ring(const Polynomial& o) const {
        if (num_vars_ != o.num_vars_)
            throw DimensionError("polynomials live in different rings");
    }

    int num_vars_;
    TermMap terms_;
};

/// Quotient f / p when p divides f exactly; nullopt when it does not.
/// Single-divisor reduction: repeatedly cancel the leading term.  Because
/// leading monomials are multiplicative, the reduction can only get stuck
/// when p genuinely fails to divide.
template <ExactField F>
std::optional<Polynomial<F>> exact_divide(const Polynomial<F>& f,
                                          const Polynomial<F>& p) {
    if (p.is_zero())
        throw DivisionByZeroError("division by the zero polynomial");
    Polynomial<F> quotient(f.num_vars());
    Polynomial<F> rest = f;
    while (!rest.is_zero()) {
        auto m = p.leading_monomial().try_divide_into(rest.leading_monomial());
        if (!m)
            return std::nullopt;
        const F c = rest.leading_coefficient() / p.leading_coefficient();
        quotient.add_term(c, *m);
        rest -= (c * p).times_monomial(*m);
    }
    return quotient;
}

/// Group the terms of a polynomial in x-variables and trailing t-variables
/// by their t-monomial part.  Returns pairs (t-monomial in the t-block ring,
/// coefficient form in the x-block ring), t-monomials in revlex-descending
/// order.  Reassembling Σ t-monomial · coefficient reproduces the input.
template <ExactField F>
std::vector<std::pair<Monomial, Polynomial<F>>>
expand_t_coefficients(const Polynomial<F>& p, int x_vars) {
    const int total = p.num_vars();
    if (x_vars < 1 || x_vars >= total)
        throw IndexError("t-block must be a nonempty proper suffix of the "
                         "variable list");
    std::map<Monomial, Polynomial<F>, RevlexGreater> groups;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> xe(m.exponents().begin(),
                            m.exponents().begin() + x_vars);
        std::vector<int> te(m.exponents().begin() + x_vars,
                            m.exponents().end());
        Monomial tm{std::move(te)};
        auto [it, inserted] =
            groups.try_emplace(std::move(tm), Polynomial<F>(x_vars));
        it->second.add_term(c, Monomial(std::move(xe)));
    }
    std::vector<std::pair<Monomial, Polynomial<F>>> out;
    out.reserve(groups.size());
    for (auto& [tm, form] : groups)
        out.emplace_back(tm, std::move(form));
    return out;
}

} // namespace ginspace
