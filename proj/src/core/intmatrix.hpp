#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mbx::exactalg {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    // Builds a matrix from column vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& f) const;
    IntMatrix transposed() const;

    IntVec apply(const IntVec& v) const;  // matrix * column vector

    IntVec column(std::size_t c) const;
    void set_column(std::size_t c, const IntVec& v);

    // Stacks blocks: [this ; below] (shared column count).
    IntMatrix vstack(const IntMatrix& below) const;
    // Joins blocks: [this | right] (shared row count).
    IntMatrix hstack(const IntMatrix& right) const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    std::string str() const;  // for diagnostics

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec entries_;
};

// Smith normal form u*m*v = s with u, v unimodular and s diagonal,
// d_i >= 0 and d_i | d_{i+1}. Deterministic: pivot is the
// smallest-magnitude nonzero entry of the working submatrix, scanned
// row-then-column, first hit wins.
struct SmithResult {
    IntMatrix u, s, v;
    std::size_t rank = 0;  // number of nonzero diagonal entries
    std::vector<Int> diagonal() const;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Integer solution of a*x = b, when one exists. The particular solution is
// canonical: back-substitution through the SNF with all free parameters
// zero. kernel columns form a basis of ker(a), in SNF column order.
struct LinearSolution {
    IntVec particular;
    IntMatrix kernel;
};
std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVec& b);

// Basis of the integer kernel of a, as matrix columns.
IntMatrix integer_kernel(const IntMatrix& a);

// Basis of the lattice spanned by the columns of w (deterministic, via SNF:
// the nonzero columns of w*v).
IntMatrix column_lattice_basis(const IntMatrix& w);

}  // namespace mbx::exactalg
