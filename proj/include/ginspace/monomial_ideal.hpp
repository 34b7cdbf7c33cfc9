#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace ginspace {

/// A monomial subspace of one degree piece: finitely many distinct degree-d
/// monomials in n variables, kept revlex-descending.
class MonomialSpace {
  public:
    MonomialSpace(int num_vars, int degree, std::vector<Monomial> monomials)
        : num_vars_(num_vars), degree_(degree),
          monomials_(std::move(monomials)) {
        if (num_vars < 1 || degree < 0)
            throw DimensionError("bad monomial space parameters");
        for (const Monomial& m : monomials_) {
            if (m.num_vars() != num_vars_)
                throw DimensionError("monomial from a different ring");
            if (m.degree() != degree_)
                throw DegreeError("monomial of degree " +
                                  std::to_string(m.degree()) +
                                  " in a degree-" + std::to_string(degree_) +
                                  " space");
        }
        std::sort(monomials_.begin(), monomials_.end(), RevlexGreater{});
        monomials_.erase(std::unique(monomials_.begin(), monomials_.end()),
                         monomials_.end());
    }

    static MonomialSpace empty(int num_vars, int degree) {
        return MonomialSpace(num_vars, degree, {});
    }

    /// All monomials of the degree: the full piece S_d.
    static MonomialSpace full(int num_vars, int degree) {
        return MonomialSpace(num_vars, degree,
                             monomials_of_degree(num_vars, degree));
    }

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(monomials_.size()); }
    bool is_empty() const { return monomials_.empty(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    bool contains(const Monomial& m) const {
        return std::find(monomials_.begin(), monomials_.end(), m) !=
               monomials_.end();
    }

    friend bool operator==(const MonomialSpace& a, const MonomialSpace& b) {
        return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ &&
               a.monomials_ == b.monomials_;
    }
    friend bool operator!=(const MonomialSpace& a, const MonomialSpace& b) {
        return !(a == b);
    }

    /// Colon by a monomial: the span of { u/m : u here, m | u }.
    MonomialSpace colon(const Monomial& m) const {
        if (m.num_vars() != num_vars_)
            throw DimensionError("monomial from a different ring");
        if (m.degree() > degree_)
            throw DegreeError("colon by a monomial of higher degree");
        std::vector<Monomial> out;
        for (const Monomial& u : monomials_)
            if (auto q = m.try_divide_into(u))
                out.push_back(*q);
        return MonomialSpace(num_vars_, degree_ - m.degree(), std::move(out));
    }

    /// Image under setting the top r variables to zero: keeps monomials free
    /// of x_{n-r+1}..x_n and renumbers into n−r variables.
    MonomialSpace restrict_top(int r) const {
        if (r < 1 || r >= num_vars_)
            throw DimensionError("restriction depth out of range");
        std::vector<Monomial> out;
        for (const Monomial& m : monomials_) {
            bool survives = true;
            for (int i = num_vars_ - r + 1; i <= num_vars_; ++i)
                if (m.exponent(i) > 0) {
                    survives = false;
                    break;
                }
            if (!survives)
                continue;
            Monomial reduced = m;
            for (int i = num_vars_; i > num_vars_ - r; --i)
                reduced = reduced.drop_var(i);
            out.push_back(std::move(reduced));
        }
        return MonomialSpace(num_vars_ - r, degree_, std::move(out));
    }

    /// Product with the span of the first k variables: { u·x_i : i ≤ k }.
    MonomialSpace times_variables(int k) const {
        if (k < 1 || k > num_vars_)
            throw IndexError("variable block out of range");
        std::vector<Monomial> out;
        out.reserve(monomials_.size() * static_cast<std::size_t>(k));
        for (const Monomial& m : monomials_)
            for (int i = 1; i <= k; ++i)
                out.push_back(m * Monomial::variable(num_vars_, i));
        return MonomialSpace(num_vars_, degree_ + 1, std::move(out));
    }

    std::string to_string() const {
        std::string out;
        for (const Monomial& m : monomials_) {
            if (!out.empty())
                out += ", ";
            out += m.to_string();
        }
        return out.empty() ? "{}" : out;
    }

  private:
    int num_vars_;
    int degree_;
    std::vector<Monomial> monomials_;
};

namespace detail {

/// All exchange moves x_i·m/x_j with i < j, x_j | m.
inline std::vector<Monomial> exchange_moves(const Monomial& m) {
    std::vector<Monomial> out;
    for (int j = 2; j <= m.num_vars(); ++j) {
        if (m.exponent(j) == 0)
            continue;
        for (int i = 1; i < j; ++i)
            out.push_back(m.exchange(i, j));
    }
    return out;
}

} // namespace detail

/// Strong stability for one degree piece: closure under every exchange
/// x_i·m/x_j with i < j when x_j divides m.
inline bool is_strongly_stable(const MonomialSpace& t) {
    for (const Monomial& m : t.monomials())
        for (const Monomial& moved : detail::exchange_moves(m))
            if (!t.contains(moved))
                return false;
    return true;
}

/// A monomial ideal held by its minimal generators (no generator divides
/// another).  Degree pieces are expanded on demand and memoized; the cache
/// is shared between copies and guarded by a mutex, so the type behaves as
/// an immutable value.
class MonomialIdeal {
  public:
    MonomialIdeal(int num_vars, std::vector<Monomial> generators)
        : num_vars_(num_vars), cache_(std::make_shared<Cache>()) {
        if (num_vars < 1)
            throw DimensionError("ideal needs at least one variable");
        for (const Monomial& g : generators)
            if (g.num_vars() != num_vars_)
                throw DimensionError("generator from a different ring");
        // Minimalize: drop duplicates and anything divisible by another.
        std::sort(generators.begin(), generators.end(),
                  [](const Monomial& a, const Monomial& b) {
                      if (a.degree() != b.degree())
                          return a.degree() < b.degree();
                      return RevlexGreater{}(a, b);
                  });
        generators.erase(std::unique(generators.begin(), generators.end()),
                         generators.end());
        for (const Monomial& g : generators) {
            bool redundant = false;
            for (const Monomial& kept : generators_)
                if (kept.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                generators_.push_back(g);
        }
    }

    static MonomialIdeal zero(int num_vars) {
        return MonomialIdeal(num_vars, {});
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return generators_.empty(); }

    /// Minimal generators, ordered by degree then revlex-descending.
    const std::vector<Monomial>& minimal_generators() const {
        return generators_;
    }

    int max_generator_degree() const {
        int d = 0;
        for (const Monomial& g : generators_)
            d = std::max(d, g.degree());
        return d;
    }

    bool contains(const Monomial& m) const {
        if (m.num_vars() != num_vars_)
            throw DimensionError("monomial from a different ring");
        for (const Monomial& g : generators_)
            if (g.divides(m))
                return true;
        return false;
    }

    /// All monomials of one degree lying in the ideal.
    MonomialSpace piece(int degree) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            auto it = cache_->pieces.find(degree);
            if (it != cache_->pieces.end())
                return MonomialSpace(num_vars_, degree, it->second);
        }
        std::vector<Monomial> hits;
        for (const Monomial& m : monomials_of_degree(num_vars_, degree))
            if (contains(m))
                hits.push_back(m);
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            cache_->pieces.emplace(degree, hits);
        }
        return MonomialSpace(num_vars_, degree, std::move(hits));
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.num_vars_ == b.num_vars_ && a.generators_ == b.generators_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string out;
        for (const Monomial& g : generators_) {
            if (!out.empty())
                out += ", ";
            out += g.to_string();
        }
        return "(" + out + ")";
    }

  private:
    struct Cache {
        std::mutex mutex;
        std::map<int, std::vector<Monomial>> pieces;
    };

    int num_vars_;
    std::vector<Monomial> generators_;
    std::shared_ptr<Cache> cache_;
};

/// Stability for an entire ideal.  Checking the exchange moves of the
/// minimal generators suffices: products with further variables inherit
/// closure degree by degree.
inline bool is_strongly_stable(const MonomialIdeal& j) {
    for (const Monomial& g : j.minimal_generators())
        for (const Monomial& moved : detail::exchange_moves(g))
            if (!j.contains(moved))
                return false;
    return true;
}

/// True iff some minimal generator has the given degree.
inline bool has_generator_in_degree(const MonomialIdeal& j, int degree) {
    for (const Monomial& g : j.minimal_generators())
        if (g.degree() == degree)
            return true;
    return false;
}

/// The smallest strongly stable ideal containing the given monomials:
/// close the set under exchange moves (degree by degree), then minimalize.
inline MonomialIdeal borel_closure(const std::vector<Monomial>& gens) {
    if (gens.empty())
        throw EmptyInputError("closure of an empty set");
    const int n = gens.front().num_vars();
    std::set<std::vector<int>> seen;
    std::vector<Monomial> work = gens;
    std::vector<Monomial> closed;
    while (!work.empty()) {
        Monomial m = std::move(work.back());
        work.pop_back();
        if (m.num_vars() != n)
            throw DimensionError("generators from different rings");
        if (!seen.insert(m.exponents()).second)
            continue;
        for (Monomial& moved : detail::exchange_moves(m))
            work.push_back(std::move(moved));
        closed.push_back(std::move(m));
    }
    return MonomialIdeal(n, std::move(closed));
}

/// Minimal generators of an ideal presented degreewise.  The pieces must
/// cover a contiguous degree range and satisfy piece_e · ⟨all variables⟩ ⊆
/// piece_{e+1}; a generator is a monomial not divisible by anything in a
/// lower piece.
inline MonomialIdeal
minimal_generators(const std::map<int, MonomialSpace>& pieces) {
    if (pieces.empty())
        throw EmptyInputError("no degree pieces given");
    const int n = pieces.begin()->second.num_vars();
    int previous = pieces.begin()->first - 1;
    for (const auto& [e, piece] : pieces) {
        if (piece.num_vars() != n)
            throw ConsistencyError("pieces from different rings");
        if (piece.degree() != e)
            throw ConsistencyError("piece keyed by the wrong degree");
        if (e != previous + 1)
            throw ConsistencyError("degree range has a gap at " +
                                   std::to_string(e));
        previous = e;
    }
    for (auto it = pieces.begin(); std::next(it) != pieces.end(); ++it) {
        const MonomialSpace& low = it->second;
        const MonomialSpace& high = std::next(it)->second;
        for (const Monomial& m : low.monomials())
            for (int i = 1; i <= n; ++i)
                if (!high.contains(m * Monomial::variable(n, i)))
                    throw ConsistencyError(
                        "pieces do not form an ideal: " + m.to_string() +
                        "*x" + std::to_string(i) + " missing in degree " +
                        std::to_string(high.degree()));
    }

    std::vector<Monomial> gens;
    for (const auto& [e, piece] : pieces) {
        for (const Monomial& m : piece.monomials()) {
            bool divisible = false;
            for (const Monomial& g : gens)
                if (g.degree() < e && g.divides(m)) {
                    divisible = true;
                    break;
                }
            if (!divisible)
                gens.push_back(m);
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

/// Number of degree-e monomials inside the ideal, or (with quotient=true)
/// the dimension of the degree-e piece of the quotient ring.
inline long long hilbert_function(const MonomialIdeal& j, int degree,
                                  bool quotient = false) {
    const long long inside = j.piece(degree).size();
    if (!quotient)
        return inside;
    return static_cast<long long>(monomial_count(j.num_vars(), degree)) -
           inside;
}

/// Height of a monomial ideal: the minimum number of variables covering
/// every minimal generator's support.  Exhaustive over variable subsets.
inline int codimension(const MonomialIdeal& j) {
    if (j.is_zero())
        throw EmptyInputError("codimension of the zero ideal is undefined");
    const int n = j.num_vars();
    if (n > 8)
        throw SizeError("codimension search supports at most 8 variables");
    for (const Monomial& g : j.minimal_generators())
        if (g.degree() == 0)
            throw EmptyInputError("codimension of the unit ideal is undefined");
    for (int size = 1; size <= n; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != size)
                continue;
            bool covers = true;
            for (const Monomial& g : j.minimal_generators()) {
                bool hit = false;
                for (int i = 1; i <= n && !hit; ++i)
                    if ((mask & (1u << (i - 1))) && g.exponent(i) > 0)
                        hit = true;
                if (!hit) {
                    covers = false;
                    break;
                }
            }
            if (covers)
                return size;
        }
    }
    throw ConsistencyError("no variable cover found"); // unreachable
}

/// Result of the colon-and-restrict ideal construction: the ideal together
/// with the degree pieces it was assembled from (degrees 1..d).
struct ColonRestrictIdeal {
    MonomialIdeal ideal;
    std::map<int, MonomialSpace> pieces;
};

/// The auxiliary ideal attached to a strongly stable degree-d monomial
/// space T in n variables, living in n−1 variables: in degree e < d its
/// piece is (T : x_n^{d−e}) with x_n then set to zero; from degree d on it
/// is the restriction of the ideal generated by T.  Stability of T makes
/// the pieces multiply into each other, which is validated on assembly.
inline ColonRestrictIdeal build_J(const MonomialSpace& t) {
    const int n = t.num_vars();
    const int d = t.degree();
    if (n < 2)
        throw DimensionError("construction needs at least two variables");
    if (d < 1)
        throw DegreeError("construction needs positive degree");
    if (!is_strongly_stable(t))
        throw PreconditionError(
            "input space is not strongly stable; the colon pieces would not "
            "form an ideal");

    std::map<int, MonomialSpace> pieces;
    for (int e = 1; e < d; ++e) {
        const Monomial power(
            [&] {
                std::vector<int> exp(static_cast<std::size_t>(n), 0);
                exp[static_cast<std::size_t>(n - 1)] = d - e;
                return exp;
            }());
        pieces.emplace(e, t.colon(power).restrict_top(1));
    }
    pieces.emplace(d, t.restrict_top(1));

    MonomialIdeal ideal = minimal_generators(pieces);
    return ColonRestrictIdeal{std::move(ideal), std::move(pieces)};
}

/// The saturation-style hypothesis on a stable degree-d space T: colon out
/// the last variable once, multiply back by the span of all variables, and
/// land exactly on T again.  For d >= 2 this is equivalent to the assembled
/// colon-and-restrict ideal having no minimal generator in degree d; in
/// degree 1 the colon piece would live in degree 0, below the range the
/// construction keeps, so the equivalence is not claimed there.
inline bool colon_multiplies_back(const MonomialSpace& t) {
    if (!is_strongly_stable(t))
        throw PreconditionError("hypothesis is defined for stable spaces");
    const Monomial xn = Monomial::variable(t.num_vars(), t.num_vars());
    return t.colon(xn).times_variables(t.num_vars()) == t;
}

/// Expansion of an ideal-of-pieces with no generator in the watched degree:
/// true iff no minimal generator of the assembled ideal has that degree.
/// Every piece must be strongly stable — the guarantee the caller relies on
/// (no generators beyond the watched degree either) needs it.
inline bool green_predicate(const std::map<int, MonomialSpace>& pieces,
                            int degree) {
    for (const auto& [e, piece] : pieces)
        if (!is_strongly_stable(piece))
            throw PreconditionError("piece in degree " + std::to_string(e) +
                                    " is not strongly stable");
    return !has_generator_in_degree(minimal_generators(pieces), degree);
}

} // namespace ginspace
