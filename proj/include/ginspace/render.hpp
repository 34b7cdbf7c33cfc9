#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"

namespace ginspace {

/// Render a three-variable staircase as rows of `x` (present) and `o`
/// (absent).  Row k collects the monomials with x3-exponent k; the single
/// x3^d entry forms the apex at the top and the x3^0 row sits at the
/// bottom.  Within a row the entries run left to right by descending x1
/// exponent, and each row is indented k spaces to keep the triangle shape.
inline std::string staircase_ascii(const MonomialSpace& t) {
    if (t.num_vars() != 3)
        throw UnsupportedFormatError(
            "ascii staircases are only available for 3 variables");
    const int d = t.degree();
    std::string out;
    for (int k = d; k >= 0; --k) {
        if (k < d)
            out.push_back('\n');
        out.append(static_cast<std::size_t>(k), ' ');
        for (int a = d - k; a >= 0; --a) {
            if (a != d - k)
                out.push_back(' ');
            out.push_back(
                t.contains(Monomial({a, d - k - a, k})) ? 'x' : 'o');
        }
    }
    return out;
}

/// Render any staircase as JSON: its degree, variable count, and the
/// exponent vectors of the present monomials in the order they are stored
/// (descending reverse-lexicographic).
inline nlohmann::json staircase_json(const MonomialSpace& t) {
    nlohmann::json present = nlohmann::json::array();
    for (const Monomial& m : t.monomials())
        present.push_back(m.exponents());
    return nlohmann::json{{"degree", t.degree()},
                          {"n", t.num_vars()},
                          {"present", std::move(present)}};
}

} // namespace ginspace
