#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_matrix.hpp"
#include "linear_change.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace ginspace {

/// Coefficient vector of a homogeneous polynomial over the degree-d
/// monomial basis, columns revlex-descending.
template <ExactField F>
std::vector<F> coefficient_row(const Polynomial<F>& p, int degree) {
    const std::vector<Monomial> columns =
        monomials_of_degree(p.num_vars(), degree);
    std::vector<F> row;
    row.reserve(columns.size());
    for (const Monomial& m : columns)
        row.push_back(p.coefficient(m));
    return row;
}

/// A finite-dimensional space of homogeneous degree-d forms in n variables,
/// held as the unique reduced row echelon basis over the revlex-descending
/// monomial columns.  Two FormSpace values are equal iff they are the same
/// subspace.
template <ExactField F>
class FormSpace {
  public:
    FormSpace(int num_vars, int degree,
              const std::vector<Polynomial<F>>& spanning)
        : num_vars_(num_vars), degree_(degree) {
        if (num_vars < 1 || degree < 0)
            throw DimensionError("bad form space parameters");
        columns_ = monomials_of_degree(num_vars_, degree_);
        ExactMatrix<F> raw(0, static_cast<int>(columns_.size()));
        for (const Polynomial<F>& p : spanning) {
            if (p.num_vars() != num_vars_)
                throw DimensionError("polynomial from a different ring");
            if (p.is_zero())
                continue;
            if (p.degree() != degree_)
                throw DegreeError("degree-" + std::to_string(p.degree()) +
                                  " polynomial in a degree-" +
                                  std::to_string(degree_) + " space");
            raw.append_row(coefficient_row(p, degree_));
        }
        adopt(reduced_row_echelon(raw));
    }

    /// Rows are coefficient vectors over the degree-d monomial columns.
    FormSpace(int num_vars, int degree, const ExactMatrix<F>& spanning_rows)
        : num_vars_(num_vars), degree_(degree) {
        if (num_vars < 1 || degree < 0)
            throw DimensionError("bad form space parameters");
        columns_ = monomials_of_degree(num_vars_, degree_);
        if (spanning_rows.cols() != static_cast<int>(columns_.size()))
            throw DimensionError("coefficient row width does not match the "
                                 "monomial basis");
        adopt(reduced_row_echelon(spanning_rows));
    }

    static FormSpace zero(int num_vars, int degree) {
        return FormSpace(num_vars, degree, std::vector<Polynomial<F>>{});
    }

    /// The full degree piece: spanned by every degree-d monomial.
    static FormSpace full(int num_vars, int degree) {
        std::vector<Polynomial<F>> gens;
        for (const Monomial& m : monomials_of_degree(num_vars, degree))
            gens.push_back(Polynomial<F>::from_term(F(1), m));
        return FormSpace(num_vars, degree, gens);
    }

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    int dim() const { return basis_.rows(); }
    bool is_zero_space() const { return basis_.rows() == 0; }

    const ExactMatrix<F>& basis_matrix() const { return basis_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }
    const std::vector<Monomial>& column_monomials() const { return columns_; }

    /// The canonical basis as polynomials (rows of the reduced echelon
    /// matrix, in matrix order).
    std::vector<Polynomial<F>> basis_polynomials() const {
        std::vector<Polynomial<F>> out;
        out.reserve(static_cast<std::size_t>(basis_.rows()));
        for (int r = 0; r < basis_.rows(); ++r) {
            Polynomial<F> p(num_vars_);
            for (int c = 0; c < basis_.cols(); ++c)
                if (!basis_.at(r, c).is_zero())
                    p.add_term(basis_.at(r, c),
                               columns_[static_cast<std::size_t>(c)]);
            out.push_back(std::move(p));
        }
        return out;
    }

    bool contains(const Polynomial<F>& p) const {
        if (p.num_vars() != num_vars_)
            throw DimensionError("polynomial from a different ring");
        if (p.is_zero())
            return true;
        if (p.degree() != degree_)
            throw DegreeError("membership test across degrees");
        RrefResult<F> view{basis_, pivots_};
        return in_row_space(view, coefficient_row(p, degree_));
    }

    friend bool operator==(const FormSpace& a, const FormSpace& b) {
        return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ &&
               a.basis_ == b.basis_;
    }
    friend bool operator!=(const FormSpace& a, const FormSpace& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string out = "span(";
        bool first = true;
        for (const Polynomial<F>& p : basis_polynomials()) {
            if (!first)
                out += ", ";
            first = false;
            out += p.to_string();
        }
        return out + ")";
    }

  private:
    void adopt(RrefResult<F> echelon) {
        basis_ = std::move(echelon.matrix);
        pivots_ = std::move(echelon.pivot_columns);
    }

    int num_vars_;
    int degree_;
    std::vector<Monomial> columns_;
    ExactMatrix<F> basis_{0, 0};
    std::vector<int> pivots_;
};

/// The initial space: the set of leading monomials of members, read off as
/// the pivot monomials of the canonical echelon basis.  Its size equals the
/// dimension of the space.
template <ExactField F>
MonomialSpace initial_space(const FormSpace<F>& v) {
    std::vector<Monomial> lead;
    lead.reserve(v.pivot_columns().size());
    for (int c : v.pivot_columns())
        lead.push_back(v.column_monomials()[static_cast<std::size_t>(c)]);
    return MonomialSpace(v.num_vars(), v.degree(), std::move(lead));
}

template <ExactField F>
FormSpace<F> sum(const FormSpace<F>& a, const FormSpace<F>& b) {
    if (a.num_vars() != b.num_vars() || a.degree() != b.degree())
        throw DimensionError("sum of spaces from different degree pieces");
    return FormSpace<F>(a.num_vars(), a.degree(),
                        vstack(a.basis_matrix(), b.basis_matrix()));
}

template <ExactField F>
FormSpace<F> intersect(const FormSpace<F>& a, const FormSpace<F>& b) {
    if (a.num_vars() != b.num_vars() || a.degree() != b.degree())
        throw DimensionError(
            "intersection of spaces from different degree pieces");
    return FormSpace<F>(a.num_vars(), a.degree(),
                        intersect_row_spaces(a.basis_matrix(),
                                             b.basis_matrix()));
}

/// Multiply every member by one fixed homogeneous polynomial.
template <ExactField F>
FormSpace<F> multiply(const FormSpace<F>& v, const Polynomial<F>& p) {
    if (p.num_vars() != v.num_vars())
        throw DimensionError("multiplier from a different ring");
    if (p.is_zero())
        throw EmptyInputError("multiplication by the zero polynomial");
    std::vector<Polynomial<F>> products;
    for (const Polynomial<F>& b : v.basis_polynomials())
        products.push_back(b * p);
    return FormSpace<F>(v.num_vars(), v.degree() + p.degree(), products);
}

/// Span of all pairwise products of members of the two spaces.
template <ExactField F>
FormSpace<F> multiply(const FormSpace<F>& v, const FormSpace<F>& w) {
    if (v.num_vars() != w.num_vars())
        throw DimensionError("product of spaces from different rings");
    std::vector<Polynomial<F>> products;
    for (const Polynomial<F>& a : v.basis_polynomials())
        for (const Polynomial<F>& b : w.basis_polynomials())
            products.push_back(a * b);
    return FormSpace<F>(v.num_vars(), v.degree() + w.degree(), products);
}

/// Apply an invertible coordinate change to every member.
template <ExactField F>
FormSpace<F> change_coordinates(const FormSpace<F>& v,
                                const LinearChange<F>& g) {
    if (g.num_vars() != v.num_vars())
        throw DimensionError("change of coordinates in a different ring");
    std::vector<Polynomial<F>> images;
    for (const Polynomial<F>& b : v.basis_polynomials())
        images.push_back(g.apply(b));
    return FormSpace<F>(v.num_vars(), v.degree(), images);
}

/// Set the top r variables to zero and renumber into n−r variables.
template <ExactField F>
FormSpace<F> restrict(const FormSpace<F>& v, int r) {
    if (r < 1 || r >= v.num_vars())
        throw DimensionError("restriction depth out of range");
    std::vector<Polynomial<F>> images;
    for (const Polynomial<F>& b : v.basis_polynomials()) {
        Polynomial<F> reduced = b;
        for (int i = v.num_vars(); i > v.num_vars() - r; --i)
            reduced = reduced.restrict_var(i);
        images.push_back(std::move(reduced));
    }
    return FormSpace<F>(v.num_vars() - r, v.degree(), images);
}

/// The colon space V : m = { f : f·m ∈ V }, of degree d − deg m.  Solved as
/// one membership system: stack the multiplication-by-m matrix next to an
/// identity block over the basis of V, reduce, and read the rows whose left
/// block vanished — their right blocks are already a canonical echelon
/// basis of the answer.
template <ExactField F>
FormSpace<F> colon_monomial(const FormSpace<F>& v, const Monomial& m) {
    if (m.num_vars() != v.num_vars())
        throw DimensionError("colon by a monomial from a different ring");
    if (m.degree() > v.degree())
        throw DegreeError("colon by a monomial of degree above the space");
    const int n = v.num_vars();
    const int d = v.degree();
    const int e = d - m.degree();

    const std::vector<Monomial> columns = monomials_of_degree(n, d);
    const std::vector<Monomial> unknowns = monomials_of_degree(n, e);
    const int left = static_cast<int>(columns.size());
    const int right = static_cast<int>(unknowns.size());

    auto column_of = [&](const Monomial& mon) {
        const auto it = std::lower_bound(columns.begin(), columns.end(), mon,
                                         RevlexGreater{});
        return static_cast<int>(it - columns.begin());
    };

    ExactMatrix<F> stacked(right + v.dim(), left + right);
    for (int i = 0; i < right; ++i) {
        const Monomial product = unknowns[static_cast<std::size_t>(i)] * m;
        stacked.at(i, column_of(product)) = F(1);
        stacked.at(i, left + i) = F(1);
    }
    for (int r = 0; r < v.dim(); ++r)
        for (int c = 0; c < left; ++c)
            stacked.at(right + r, c) = v.basis_matrix().at(r, c);

    const ExactMatrix<F> solution =
        right_block_of_zero_left_rows(reduced_row_echelon(stacked), left);
    return FormSpace<F>(n, e, solution);
}

namespace detail {

/// An invertible change C with h ∘ C = x_n for a nonzero linear form h with
/// coefficient vector a: column n is e_k/a_k for the last nonzero index k,
/// and the remaining columns run through the kernel basis e_i − (a_i/a_k)e_k
/// (i ≠ k) in index order.
template <ExactField F>
LinearChange<F> change_sending_to_last_variable(const std::vector<F>& a) {
    const int n = static_cast<int>(a.size());
    int k = 0;
    for (int i = 1; i <= n; ++i)
        if (!a[static_cast<std::size_t>(i - 1)].is_zero())
            k = i;
    if (k == 0)
        throw EmptyInputError("zero linear form");
    const F ak = a[static_cast<std::size_t>(k - 1)];

    ExactMatrix<F> c(n, n);
    c.at(k - 1, n - 1) = ak.inverse();
    for (int j = 1; j <= n - 1; ++j) {
        const int i = (j <= k - 1) ? j : j + 1;
        c.at(i - 1, j - 1) = F(1);
        const F ai = a[static_cast<std::size_t>(i - 1)];
        if (!ai.is_zero()) {
            F adjusted = c.at(k - 1, j - 1) - ai / ak;
            c.at(k - 1, j - 1) = adjusted;
        }
    }
    return LinearChange<F>(c);
}

} // namespace detail

/// The colon space V : h for a nonzero linear form h.  Change coordinates
/// so h becomes the last variable, colon by that variable, and change back.
template <ExactField F>
FormSpace<F> colon_form(const FormSpace<F>& v, const Polynomial<F>& h) {
    if (h.num_vars() != v.num_vars())
        throw DimensionError("colon by a form from a different ring");
    if (h.is_zero())
        throw EmptyInputError("colon by the zero form");
    if (h.degree() != 1)
        throw DegreeError("colon by a form that is not linear");
    const int n = v.num_vars();

    std::vector<F> a(static_cast<std::size_t>(n), F(0));
    for (const auto& [mon, coeff] : h.terms())
        for (int i = 1; i <= n; ++i)
            if (mon.exponent(i) == 1)
                a[static_cast<std::size_t>(i - 1)] = coeff;

    const LinearChange<F> c = detail::change_sending_to_last_variable(a);
    const FormSpace<F> moved = change_coordinates(v, c);
    const FormSpace<F> quotient =
        colon_monomial(moved, Monomial::variable(n, n));
    return change_coordinates(quotient, c.inverse());
}

/// The degree-e piece of the ideal generated by V: the span of all b·m for
/// basis members b and monomials m of degree e − d.
template <ExactField F>
FormSpace<F> ideal_piece(const FormSpace<F>& v, int e) {
    if (e < v.degree())
        throw DegreeError("ideal piece below the generating degree");
    const int n = v.num_vars();
    std::vector<Polynomial<F>> products;
    for (const Polynomial<F>& b : v.basis_polynomials())
        for (const Monomial& m : monomials_of_degree(n, e - v.degree()))
            products.push_back(b.times_monomial(m));
    return FormSpace<F>(n, e, products);
}

/// Degreewise colon-and-restrict pieces of V up to a cap: below the
/// generating degree d, colon by the matching power of the last variable,
/// then restrict; from d on, take ideal pieces and restrict.  Values live
/// in n−1 variables.
template <ExactField F>
std::map<int, FormSpace<F>> build_colon_ideal(const FormSpace<F>& v,
                                              int max_degree) {
    const int n = v.num_vars();
    const int d = v.degree();
    if (n < 2)
        throw DimensionError("construction needs at least two variables");
    if (max_degree < 1)
        throw DegreeError("max degree must be at least 1");
    std::map<int, FormSpace<F>> pieces;
    for (int e = 1; e <= max_degree; ++e) {
        if (e < d) {
            std::vector<int> exp(static_cast<std::size_t>(n), 0);
            exp[static_cast<std::size_t>(n - 1)] = d - e;
            pieces.emplace(e, restrict(colon_monomial(v, Monomial(exp)), 1));
        } else {
            pieces.emplace(e, restrict(ideal_piece(v, e), 1));
        }
    }
    return pieces;
}

} // namespace ginspace
