#include <catch2/catch_amalgamated.hpp>

#include "ginspace/exact_matrix.hpp"
#include "ginspace/prng.hpp"
#include "ginspace/scalar.hpp"
#include "helpers.hpp"

using namespace ginspace;

namespace {

template <ExactField F>
ExactMatrix<F> random_matrix(int rows, int cols, SplitMix64& rng,
                             int range = 9) {
    ExactMatrix<F> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = F(rng.between(-range, range));
    return m;
}

template <ExactField F>
std::vector<std::vector<F>> rows_of(const ExactMatrix<F>& m) {
    std::vector<std::vector<F>> out;
    for (int i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i));
    return out;
}

} // namespace

TEMPLATE_TEST_CASE("rref produces a canonical reduced echelon form",
                   "[rref]", Rational, PrimeField) {
    using F = TestType;
    // [[1,2,3],[2,4,8]] -> [[1,2,0],[0,0,1]], pivots 0 and 2.
    ExactMatrix<F> m(2, 3);
    m.at(0, 0) = F(1);
    m.at(0, 1) = F(2);
    m.at(0, 2) = F(3);
    m.at(1, 0) = F(2);
    m.at(1, 1) = F(4);
    m.at(1, 2) = F(8);
    const RrefResult<F> r = reduced_row_echelon(m);
    REQUIRE(r.rank() == 2);
    CHECK(r.pivot_columns == std::vector<int>{0, 2});
    CHECK(r.matrix.at(0, 0) == F(1));
    CHECK(r.matrix.at(0, 1) == F(2));
    CHECK(r.matrix.at(0, 2) == F(0));
    CHECK(r.matrix.at(1, 0) == F(0));
    CHECK(r.matrix.at(1, 1) == F(0));
    CHECK(r.matrix.at(1, 2) == F(1));
}

TEMPLATE_TEST_CASE("rref is idempotent and preserves the row space",
                   "[rref]", Rational, PrimeField) {
    using F = TestType;
    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = static_cast<int>(rng.between(1, 6));
        const int cols = static_cast<int>(rng.between(1, 7));
        const ExactMatrix<F> m = random_matrix<F>(rows, cols, rng);
        const RrefResult<F> r = reduced_row_echelon(m);

        const RrefResult<F> again = reduced_row_echelon(r.matrix);
        CHECK(again.rank() == r.rank());
        for (int i = 0; i < r.rank(); ++i)
            CHECK(again.matrix.row(i) == r.matrix.row(i));

        // Every original row lies in the echelon row space and every
        // echelon row is a combination of original rows (equal ranks +
        // containment one way implies the other; we check both anyway).
        for (const auto& row : rows_of(m))
            CHECK(in_row_space(r, row));
        const RrefResult<F> of_original = reduced_row_echelon(m);
        for (int i = 0; i < r.rank(); ++i)
            CHECK(in_row_space(of_original, r.matrix.row(i)));
    }
}

TEST_CASE("rank agrees with the fraction-free oracle on random matrices") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = static_cast<int>(rng.between(1, 6));
        const int cols = static_cast<int>(rng.between(1, 6));
        ExactMatrix<Rational> m(rows, cols);
        std::vector<std::vector<mpz_class>> ints(
            static_cast<std::size_t>(rows),
            std::vector<mpz_class>(static_cast<std::size_t>(cols)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                const long v = static_cast<long>(rng.between(-4, 4));
                m.at(i, j) = Rational(v);
                ints[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(j)] = v;
            }
        CHECK(rank(m) == testhelp::bareiss_rank(ints));
    }
}

TEST_CASE("membership separates inside from outside") {
    ExactMatrix<Rational> m(2, 3);
    m.at(0, 0) = Rational(1);
    m.at(0, 2) = Rational(1);
    m.at(1, 1) = Rational(1);
    const RrefResult<Rational> r = reduced_row_echelon(m);
    CHECK(in_row_space(r, {Rational(2), Rational(3), Rational(2)}));
    CHECK(in_row_space(r, {Rational(0), Rational(0), Rational(0)}));
    CHECK_FALSE(in_row_space(r, {Rational(1), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(in_row_space(r, {Rational(1)}), DimensionError);
}

TEST_CASE("right block extraction returns rows with zero left half") {
    // Stack [I2 | A; B | 0] style input: rows whose left half eliminates
    // to zero contribute their right halves.
    ExactMatrix<Rational> m(3, 4);
    // row0: left (1,0), right (1,2)
    m.at(0, 0) = Rational(1);
    m.at(0, 2) = Rational(1);
    m.at(0, 3) = Rational(2);
    // row1: left (1,0), right (0,1) -> difference has zero left half
    m.at(1, 0) = Rational(1);
    m.at(1, 3) = Rational(1);
    // row2: left (0,1), right (1,1)
    m.at(2, 1) = Rational(1);
    m.at(2, 2) = Rational(1);
    m.at(2, 3) = Rational(1);
    const auto block =
        right_block_of_zero_left_rows(reduced_row_echelon(m), 2);
    REQUIRE(block.rows() == 1);
    // The only left-null combination is row0 - row1 = (0,0,1,1); the rref
    // normalizes it to leading 1.
    CHECK(block.at(0, 0) == Rational(1));
    CHECK(block.at(0, 1) == Rational(1));
}

TEMPLATE_TEST_CASE("intersection satisfies the dimension formula",
                   "[intersect]", Rational, PrimeField) {
    using F = TestType;
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const int cols = static_cast<int>(rng.between(2, 6));
        const ExactMatrix<F> a =
            random_matrix<F>(static_cast<int>(rng.between(1, 4)), cols, rng);
        const ExactMatrix<F> b =
            random_matrix<F>(static_cast<int>(rng.between(1, 4)), cols, rng);
        const int ra = rank(a);
        const int rb = rank(b);
        const int rsum = rank(vstack(a, b));
        const ExactMatrix<F> meet = intersect_row_spaces(a, b);
        CHECK(rank(meet) == ra + rb - rsum);
        // Every intersection row lies in both spaces.
        const RrefResult<F> ba = reduced_row_echelon(a);
        const RrefResult<F> bb = reduced_row_echelon(b);
        for (int i = 0; i < meet.rows(); ++i) {
            CHECK(in_row_space(ba, meet.row(i)));
            CHECK(in_row_space(bb, meet.row(i)));
        }
    }
}

TEST_CASE("hand intersection: <e1,e2> meet <e2,e3> is <e2>") {
    ExactMatrix<Rational> a(2, 3), b(2, 3);
    a.at(0, 0) = Rational(1);
    a.at(1, 1) = Rational(1);
    b.at(0, 1) = Rational(1);
    b.at(1, 2) = Rational(1);
    const auto meet = intersect_row_spaces(a, b);
    REQUIRE(meet.rows() == 1);
    CHECK(meet.at(0, 0) == Rational(0));
    CHECK(meet.at(0, 1) == Rational(1));
    CHECK(meet.at(0, 2) == Rational(0));
}

TEST_CASE("stacking shape errors") {
    ExactMatrix<Rational> a(1, 2), b(1, 3);
    CHECK_THROWS_AS(vstack(a, b), DimensionError);
    CHECK_THROWS_AS(hstack(a, ExactMatrix<Rational>(2, 2)),
                    DimensionError);
    CHECK_THROWS_AS(matmul(a, a), DimensionError);
}

TEST_CASE("prime field arithmetic round-trips through inverses") {
    REQUIRE(PrimeField::modulus() == 32003);
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const PrimeField a(rng.between(1, 32002));
        CHECK(a * a.inverse() == PrimeField(1));
        const PrimeField b(rng.between(-100000, 100000));
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
    CHECK_THROWS_AS(PrimeField(0).inverse(), DivisionByZeroError);
}
