#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "scalar.hpp"

namespace ginspace {

namespace detail {

/// Rescale a row so that elimination never accumulates nested fractions.
/// For rationals: multiply by the lcm of denominators, divide by the gcd of
/// numerators (the row becomes a primitive integer vector).  For other
/// fields this is a no-op; the final pivot-scaling pass restores canonical
/// form either way.
template <ExactField F>
inline void make_row_primitive(std::vector<F>&) {}

template <>
inline void make_row_primitive<Rational>(std::vector<Rational>& row) {
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const Rational& x : row) {
        if (x.is_zero())
            continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                x.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                x.numerator().get_mpz_t());
    }
    if (num_gcd == 0)
        return; // zero row
    const Rational scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    for (Rational& x : row)
        x *= scale;
}

} // namespace detail

/// Dense matrix over an exact field.  Row spaces are the working currency:
/// every subspace in the library is a row space of one of these.
template <ExactField F>
class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows),
                std::vector<F>(static_cast<std::size_t>(cols), F(0))) {
        if (rows < 0 || cols < 0)
            throw DimensionError("negative matrix dimensions");
    }

    explicit ExactMatrix(std::vector<std::vector<F>> rows)
        : rows_(static_cast<int>(rows.size())), data_(std::move(rows)) {
        cols_ = data_.empty() ? 0 : static_cast<int>(data_.front().size());
        for (const auto& r : data_)
            if (static_cast<int>(r.size()) != cols_)
                throw DimensionError("ragged rows in matrix literal");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.data_[i][i] = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const F& at(int r, int c) const { return data_[check(r, c)][c]; }
    F& at(int r, int c) { return data_[check(r, c)][c]; }

    const std::vector<F>& row(int r) const {
        if (r < 0 || r >= rows_)
            throw IndexError("matrix row out of range");
        return data_[r];
    }

    void append_row(std::vector<F> row) {
        if (rows_ == 0 && cols_ == 0)
            cols_ = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != cols_)
            throw DimensionError("appended row has wrong width");
        data_.push_back(std::move(row));
        ++rows_;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
        return !(a == b);
    }

    std::string to_string() const {
        std::string out;
        for (const auto& r : data_) {
            out += '[';
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (j)
                    out += ' ';
                out += r[j].to_string();
            }
            out += "]\n";
        }
        return out;
    }

  private:
    int check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw IndexError("matrix index out of range");
        return r;
    }

    int rows_;
    int cols_ = 0;
    std::vector<std::vector<F>> data_;
};

/// Horizontal concatenation [a | b].
template <ExactField F>
ExactMatrix<F> hstack(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
    if (a.rows() != b.rows())
        throw DimensionError("hstack: row counts differ");
    ExactMatrix<F> out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j)
            out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

/// Vertical concatenation [a; b].
template <ExactField F>
ExactMatrix<F> vstack(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
    if (a.cols() != b.cols() && a.rows() > 0 && b.rows() > 0)
        throw DimensionError("vstack: column counts differ");
    ExactMatrix<F> out = a;
    for (int i = 0; i < b.rows(); ++i)
        out.append_row(b.row(i));
    return out;
}

template <ExactField F>
struct RrefResult {
    ExactMatrix<F> matrix;
    std::vector<int> pivot_columns; // strictly increasing, 0-based
    int rank() const { return static_cast<int>(pivot_columns.size()); }
};

/// Unique reduced row echelon form: pivots are 1, pivot columns are zero
/// elsewhere, zero rows are dropped.  Gauss-Jordan with first-nonzero pivot
/// choice; rows are renormalized to primitive integer vectors after each
/// combination step to keep rational entries small.
template <ExactField F>
RrefResult<F> reduced_row_echelon(ExactMatrix<F> m) {
    std::vector<std::vector<F>> work;
    work.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        work.push_back(m.row(i));
        detail::make_row_primitive<F>(work.back());
    }

    std::vector<int> pivots;
    std::size_t next = 0; // row where the next pivot lands
    for (int col = 0; col < m.cols() && next < work.size(); ++col) {
        std::size_t found = work.size();
        for (std::size_t r = next; r < work.size(); ++r) {
            if (!work[r][col].is_zero()) {
                found = r;
                break;
            }
        }
        if (found == work.size())
            continue;
        std::swap(work[next], work[found]);
        const std::vector<F> pivot_row = work[next];
        const F& p = pivot_row[col];
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == next || work[r][col].is_zero())
                continue;
            // row_r := p·row_r − row_r[col]·pivot_row, then strip content.
            const F factor = work[r][col];
            for (int j = 0; j < m.cols(); ++j)
                work[r][j] = p * work[r][j] - factor * pivot_row[j];
            detail::make_row_primitive<F>(work[r]);
        }
        pivots.push_back(col);
        ++next;
    }

    // Scale pivots to 1 and drop zero rows.
    ExactMatrix<F> out(0, m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::vector<F> row = work[r];
        const F inv = row[pivots[r]].inverse();
        for (F& x : row)
            x = x * inv;
        out.append_row(std::move(row));
    }
    return RrefResult<F>{std::move(out), std::move(pivots)};
}

template <ExactField F>
int rank(const ExactMatrix<F>& m) {
    return reduced_row_echelon(m).rank();
}

/// True iff v lies in the row space described by an rref result.
template <ExactField F>
bool in_row_space(const RrefResult<F>& basis, std::vector<F> v) {
    if (static_cast<int>(v.size()) != basis.matrix.cols())
        throw DimensionError("membership: width mismatch");
    for (int r = 0; r < basis.matrix.rows(); ++r) {
        const int c = basis.pivot_columns[r];
        if (v[c].is_zero())
            continue;
        const F factor = v[c]; // pivot entry is 1
        for (int j = 0; j < basis.matrix.cols(); ++j)
            v[j] = v[j] - factor * basis.matrix.at(r, j);
    }
    for (const F& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

/// From an rref'd stacked matrix, collect the right blocks of the rows whose
/// first `left_cols` entries vanish.  With the Zassenhaus-style stackings
/// used below, those right blocks are themselves a reduced echelon basis of
/// the subspace being extracted (pivots of such rows lie in the right block,
/// and full rref has cleared those columns in every other row).
template <ExactField F>
ExactMatrix<F> right_block_of_zero_left_rows(const RrefResult<F>& r,
                                             int left_cols) {
    const int total = r.matrix.cols();
    if (left_cols < 0 || left_cols > total)
        throw DimensionError("bad left block width");
    ExactMatrix<F> out(0, total - left_cols);
    for (int i = 0; i < r.matrix.rows(); ++i) {
        if (r.pivot_columns[i] < left_cols)
            continue; // pivot in the left block → row has nonzero left part
        std::vector<F> row;
        row.reserve(static_cast<std::size_t>(total - left_cols));
        for (int j = left_cols; j < total; ++j)
            row.push_back(r.matrix.at(i, j));
        out.append_row(std::move(row));
    }
    return out;
}

template <ExactField F>
ExactMatrix<F> matmul(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions differ");
    ExactMatrix<F> out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero())
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

/// Row-space intersection via the stacked kernel trick: rref of
/// [A | A; B | 0]; rows with zero left block carry the intersection in
/// their right block.
template <ExactField F>
ExactMatrix<F> intersect_row_spaces(const ExactMatrix<F>& a,
                                    const ExactMatrix<F>& b) {
    if (a.cols() != b.cols())
        throw DimensionError("intersect: width mismatch");
    const int w = a.cols();
    ExactMatrix<F> zero(b.rows(), w);
    ExactMatrix<F> stacked = vstack(hstack(a, a), hstack(b, zero));
    return right_block_of_zero_left_rows(reduced_row_echelon(stacked), w);
}

} // namespace ginspace
