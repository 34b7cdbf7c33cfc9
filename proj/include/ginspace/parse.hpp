#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

namespace ginspace {

/// A syntax or validation error in an input document, carrying the 1-based
/// line and column where it was detected.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, int line, int column)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// A parsed input document: a declared variable count, the forms spanning
/// the space of interest, optional named candidate polynomials (p, q), and
/// optional run options usable as flag defaults.
struct InputDocument {
    int num_vars = 0;
    /// Common degree of the forms; −1 when the document lists none.
    int degree = -1;
    std::vector<Polynomial<Rational>> forms;
    std::map<std::string, Polynomial<Rational>> candidates;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> range;
    std::optional<int> maxdeg;
};

namespace detail {

/// Recursive-descent parser for one polynomial expression:
///   poly   := term (('+' | '-') term)*
///   term   := [sign] [rational] ['*'] factor ('*' factor)*
///   factor := x<k> ['^' int]
/// Rationals are `a` or `a/b`; whitespace is insignificant; there are no
/// parentheses and no implicit product between factors.
class PolynomialParser {
  public:
    PolynomialParser(const std::string& text, int num_vars, int line,
                     int column_offset)
        : text_(text), num_vars_(num_vars), line_(line),
          column_offset_(column_offset) {}

    Polynomial<Rational> parse() {
        Polynomial<Rational> result(num_vars_);
        skip_spaces();
        if (at_end())
            return result; // blank expression = zero polynomial
        bool first = true;
        while (true) {
            int sign = 1;
            skip_spaces();
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                advance();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            parse_term(result, sign);
            skip_spaces();
            if (at_end())
                break;
            if (peek() != '+' && peek() != '-')
                fail("unexpected character '" + std::string(1, peek()) +
                     "'");
            first = false;
        }
        return result;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    int column() const {
        return column_offset_ + static_cast<int>(pos_) + 1;
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column());
    }

    void skip_spaces() {
        while (!at_end() && (peek() == ' ' || peek() == '\t'))
            advance();
    }

    /// Digit run of any length; coefficients are exact, so no size cap.
    std::string parse_digits(const std::string& what) {
        skip_spaces();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected " + what);
        std::string digits;
        while (!at_end() &&
               std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            advance();
        }
        return digits;
    }

    /// Digit run constrained to a small machine integer (indices and
    /// exponents).
    long long parse_integer(const std::string& what) {
        const std::string digits = parse_digits(what);
        if (digits.size() > 9)
            fail(what + " is too large");
        return std::stoll(digits);
    }

    Rational parse_rational() {
        const std::string numerator = parse_digits("a number");
        skip_spaces();
        if (!at_end() && peek() == '/') {
            advance();
            const std::string denominator = parse_digits("a denominator");
            if (denominator.find_first_not_of('0') == std::string::npos)
                fail("zero denominator");
            return Rational::from_decimal(numerator + "/" + denominator);
        }
        return Rational::from_decimal(numerator);
    }

    /// factor := x<k> ['^' int]; accumulates into the exponent vector.
    void parse_factor(std::vector<int>& exponents) {
        skip_spaces();
        if (at_end() || peek() != 'x')
            fail("expected a variable like x1");
        advance();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a variable index after 'x'");
        const long long index = parse_integer("a variable index");
        if (index < 1 || index > num_vars_)
            fail("variable x" + std::to_string(index) +
                 " out of range 1.." + std::to_string(num_vars_));
        long long exponent = 1;
        skip_spaces();
        if (!at_end() && peek() == '^') {
            advance();
            exponent = parse_integer("an exponent");
            if (exponent > 64)
                fail("exponent is too large");
        }
        exponents[static_cast<std::size_t>(index - 1)] +=
            static_cast<int>(exponent);
    }

    void parse_term(Polynomial<Rational>& result, int sign) {
        skip_spaces();
        Rational coefficient(1);
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = parse_rational();
            skip_spaces();
            if (!at_end() && peek() == '*') {
                advance();
                skip_spaces();
            }
        }
        std::vector<int> exponents(static_cast<std::size_t>(num_vars_), 0);
        parse_factor(exponents);
        while (true) {
            skip_spaces();
            if (at_end() || peek() != '*')
                break;
            advance();
            parse_factor(exponents);
        }
        if (sign < 0)
            coefficient = -coefficient;
        if (coefficient.is_zero())
            return;
        try {
            result.add_term(coefficient, Monomial(std::move(exponents)));
        } catch (const DegreeError&) {
            throw ParseError("inhomogeneous polynomial: terms of different "
                            "degrees",
                            line_, column());
        }
    }

    const std::string& text_;
    int num_vars_;
    int line_;
    int column_offset_;
    std::size_t pos_ = 0;
};

inline std::string strip_comment(const std::string& line) {
    const std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::string trimmed(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(
                              text[begin])))
        ++begin;
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    return text.substr(begin, end - begin);
}

/// If the line starts with an identifier followed by ':', return the key
/// and the position just past the colon.
inline std::optional<std::pair<std::string, std::size_t>>
split_key(const std::string& line) {
    std::size_t i = 0;
    while (i < line.size() && (std::isalpha(static_cast<unsigned char>(
                                   line[i])) ||
                               line[i] == '_'))
        ++i;
    if (i == 0)
        return std::nullopt;
    std::size_t j = i;
    while (j < line.size() && (line[j] == ' ' || line[j] == '\t'))
        ++j;
    if (j >= line.size() || line[j] != ':')
        return std::nullopt;
    return std::make_pair(line.substr(0, i), j + 1);
}

} // namespace detail

/// Parse a single polynomial expression against a fixed variable count.
/// The line/column in any error refer to positions within the expression.
inline Polynomial<Rational> parse_polynomial(const std::string& text,
                                             int num_vars, int line = 1,
                                             int column_offset = 0) {
    return detail::PolynomialParser(text, num_vars, line, column_offset)
        .parse();
}

/// Parse an input document: first content line `vars: n`, then any mix of
/// option lines (`seed:`, `trials:`, `range:`, `maxdeg:`, `p:`, `q:`) and
/// one polynomial per line spanning the space.  `#` starts a comment; the
/// forms must be homogeneous of one common degree.
inline InputDocument parse_document(const std::string& text) {
    InputDocument doc;
    bool saw_header = false;

    std::vector<std::string> lines;
    {
        std::string current;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        lines.push_back(std::move(current));
    }

    for (std::size_t index = 0; index < lines.size(); ++index) {
        const int line_number = static_cast<int>(index) + 1;
        const std::string body = detail::strip_comment(lines[index]);
        const std::string content = detail::trimmed(body);
        if (content.empty())
            continue;

        const auto keyed = detail::split_key(body);

        if (!saw_header) {
            if (!keyed || keyed->first != "vars")
                throw ParseError("expected a `vars: n` header line",
                                 line_number, 1);
            const std::string value =
                detail::trimmed(body.substr(keyed->second));
            std::size_t digits = 0;
            while (digits < value.size() &&
                   std::isdigit(static_cast<unsigned char>(value[digits])))
                ++digits;
            if (digits == 0 || digits != value.size())
                throw ParseError("expected an integer variable count",
                                 line_number,
                                 static_cast<int>(keyed->second) + 1);
            const long long n = std::stoll(value);
            if (n < 1 || n > 16)
                throw ParseError("variable count must be between 1 and 16",
                                 line_number,
                                 static_cast<int>(keyed->second) + 1);
            doc.num_vars = static_cast<int>(n);
            saw_header = true;
            continue;
        }

        if (keyed) {
            const std::string& key = keyed->first;
            const std::string raw = body.substr(keyed->second);
            const std::string value = detail::trimmed(raw);
            const int value_column = static_cast<int>(keyed->second) + 1;
            auto parse_int_option = [&](const char* what) -> long long {
                std::size_t digits = 0;
                while (digits < value.size() &&
                       std::isdigit(
                           static_cast<unsigned char>(value[digits])))
                    ++digits;
                if (digits == 0 || digits != value.size() ||
                    value.size() > 18)
                    throw ParseError(std::string("expected a nonnegative "
                                                 "integer for ") +
                                         what,
                                     line_number, value_column);
                return std::stoll(value);
            };
            if (key == "vars") {
                throw ParseError("duplicate vars header", line_number, 1);
            } else if (key == "seed") {
                if (doc.seed)
                    throw ParseError("duplicate seed option", line_number, 1);
                doc.seed = static_cast<std::uint64_t>(
                    parse_int_option("seed"));
            } else if (key == "trials") {
                if (doc.trials)
                    throw ParseError("duplicate trials option", line_number,
                                     1);
                doc.trials = static_cast<int>(parse_int_option("trials"));
            } else if (key == "range") {
                if (doc.range)
                    throw ParseError("duplicate range option", line_number,
                                     1);
                doc.range = static_cast<int>(parse_int_option("range"));
            } else if (key == "maxdeg") {
                if (doc.maxdeg)
                    throw ParseError("duplicate maxdeg option", line_number,
                                     1);
                doc.maxdeg = static_cast<int>(parse_int_option("maxdeg"));
            } else if (key == "p" || key == "q") {
                if (doc.candidates.count(key))
                    throw ParseError("duplicate candidate " + key,
                                     line_number, 1);
                Polynomial<Rational> candidate = parse_polynomial(
                    raw, doc.num_vars, line_number,
                    static_cast<int>(keyed->second));
                if (candidate.is_zero())
                    throw ParseError("candidate " + key +
                                         " must not be zero",
                                     line_number, value_column);
                doc.candidates.emplace(key, std::move(candidate));
            } else {
                throw ParseError("unknown key `" + key + "`", line_number,
                                 1);
            }
            continue;
        }

        Polynomial<Rational> form =
            parse_polynomial(body, doc.num_vars, line_number, 0);
        if (form.is_zero())
            continue;
        if (doc.degree == -1) {
            doc.degree = form.degree();
        } else if (form.degree() != doc.degree) {
            throw ParseError(
                "form of degree " + std::to_string(form.degree()) +
                    " differs from the common degree " +
                    std::to_string(doc.degree),
                line_number, 1);
        }
        doc.forms.push_back(std::move(form));
    }

    if (!saw_header)
        throw ParseError("missing `vars: n` header", 1, 1);
    return doc;
}

} // namespace ginspace
