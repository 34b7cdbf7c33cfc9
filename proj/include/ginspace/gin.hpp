#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "form_space.hpp"
#include "linear_change.hpp"
#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "prng.hpp"

namespace ginspace {

/// Thrown when repeated random coordinate changes keep producing different
/// strongly stable staircases: the sampled initial spaces are reported so
/// the caller can inspect the disagreement.
class NonGenericError : public Error {
  public:
    NonGenericError(const std::string& message,
                    std::vector<MonomialSpace> staircases, int trials)
        : Error(message), staircases_(std::move(staircases)),
          trials_(trials) {}

    const std::vector<MonomialSpace>& staircases() const {
        return staircases_;
    }
    int trials() const { return trials_; }

  private:
    std::vector<MonomialSpace> staircases_;
    int trials_;
};

/// A generic initial space together with the evidence: the agreed staircase,
/// one coordinate change that realized it, how many retained samples were
/// compared, and the master seed that drove the sampling.
template <ExactField F>
struct GinResult {
    MonomialSpace monomials;
    LinearChange<F> change;
    int trials;
    bool agreed;
    std::uint64_t seed;
};

/// One random coordinate change applied to the space, with the change
/// returned alongside so downstream steps can reuse or invert it.
template <ExactField F>
std::pair<FormSpace<F>, LinearChange<F>>
generify(const FormSpace<F>& v, std::uint64_t seed, int range = 1000) {
    LinearChange<F> g = random_change<F>(v.num_vars(), seed, range);
    return {change_coordinates(v, g), g};
}

/// The generic initial space, computed by sampling: draw random coordinate
/// changes, keep the staircases that are strongly stable (the signature of
/// a generic draw), and accept when a full batch of retained samples
/// coincides.  A batch that disagrees internally is thrown away and a fresh
/// batch is drawn; after max_rounds disagreeing batches the distinct
/// staircases are reported via NonGenericError.  Per-sample seeds are
/// derived from the master seed, so results are reproducible.
template <ExactField F>
GinResult<F> gin(const FormSpace<F>& v, int trials = 3,
                 std::uint64_t seed = 1, int range = 1000,
                 int max_rounds = 2) {
    if (trials < 1)
        throw PreconditionError("at least one trial is required");
    if (max_rounds < 1)
        throw PreconditionError("at least one round is required");

    std::uint64_t attempt = 0;
    std::vector<MonomialSpace> last_batch;
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<MonomialSpace> batch;
        std::vector<LinearChange<F>> changes;
        const std::uint64_t budget =
            static_cast<std::uint64_t>(trials) * 20u;
        std::uint64_t drawn = 0;
        while (static_cast<int>(batch.size()) < trials) {
            if (drawn++ >= budget)
                throw RandomnessError(
                    "no strongly stable staircase found in " +
                    std::to_string(budget) + " draws");
            const std::uint64_t sample_seed = derive_seed(seed, attempt++);
            LinearChange<F> g =
                random_change<F>(v.num_vars(), sample_seed, range);
            MonomialSpace staircase =
                initial_space(change_coordinates(v, g));
            if (!is_strongly_stable(staircase))
                continue;
            batch.push_back(std::move(staircase));
            changes.push_back(std::move(g));
        }
        bool all_equal = true;
        for (const MonomialSpace& s : batch)
            if (s != batch.front()) {
                all_equal = false;
                break;
            }
        if (all_equal)
            return GinResult<F>{batch.front(), changes.front(), trials, true,
                                seed};
        last_batch = std::move(batch);
    }

    std::vector<MonomialSpace> distinct;
    for (const MonomialSpace& s : last_batch) {
        bool seen = false;
        for (const MonomialSpace& kept : distinct)
            if (kept == s) {
                seen = true;
                break;
            }
        if (!seen)
            distinct.push_back(s);
    }
    throw NonGenericError("random samples yielded " +
                              std::to_string(distinct.size()) +
                              " distinct strongly stable staircases",
                          std::move(distinct), trials);
}

/// A random homogeneous form with integer coefficients drawn uniformly
/// from [−range, range] for every degree-d monomial (zero draws allowed;
/// redrawn once if the whole form vanishes).
template <ExactField F>
Polynomial<F> random_form(int num_vars, int degree, SplitMix64& rng,
                          int range = 1000) {
    if (range < 1)
        throw PreconditionError("coefficient range must be positive");
    for (int attempt = 0; attempt < 100; ++attempt) {
        Polynomial<F> p(num_vars);
        for (const Monomial& m : monomials_of_degree(num_vars, degree)) {
            const long long c = rng.between(-range, range);
            if (c != 0)
                p.add_term(F(static_cast<int>(c)), m);
        }
        if (!p.is_zero())
            return p;
    }
    throw RandomnessError("random form kept vanishing");
}

} // namespace ginspace
