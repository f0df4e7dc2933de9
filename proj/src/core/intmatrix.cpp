#include "core/intmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace mbx::exactalg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    IntMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw ShapeError("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (long long e : row) m.at(i, j++) = e;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("from_columns: wrong column length");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& e = at(i, k);
            if (e == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += e * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum: dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

IntMatrix IntMatrix::scaled(const Int& f) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = f * entries_[i];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (v.size() != cols_) throw ShapeError("matrix apply: dimension mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

void IntMatrix::set_column(std::size_t c, const IntVec& v) {
    if (v.size() != rows_) throw ShapeError("set_column: wrong length");
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i];
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0)
        throw ShapeError("vstack: column count mismatch");
    std::size_t nc = rows_ == 0 ? below.cols_ : cols_;
    IntMatrix out(rows_ + below.rows_, nc);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < below.cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
    if (rows_ != right.rows_ && cols_ != 0 && right.cols_ != 0)
        throw ShapeError("hstack: row count mismatch");
    std::size_t nr = cols_ == 0 ? right.rows_ : rows_;
    IntMatrix out(nr, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < right.rows_; ++i)
        for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    return out;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("submatrix: out of range");
    IntMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> d;
    std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

// Row/column elementary operations applied to the working triple.
struct SnfState {
    IntMatrix s, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s.at(a, j), s.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s.at(i, a), s.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(dst, j) += f * s.at(src, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += f * u.at(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < s.rows(); ++i) s.at(i, dst) += f * s.at(i, src);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += f * v.at(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < s.cols(); ++j) s.at(r, j) = -s.at(r, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
};

// Smallest-magnitude nonzero entry of s[k.., k..]; scan rows first, then
// columns, keep the first minimum. Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& s, std::size_t k, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < s.rows(); ++i)
        for (std::size_t j = k; j < s.cols(); ++j) {
            const Int& e = s.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
                if (best == 1) return true;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SnfState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    std::size_t nmin = std::min(m.rows(), m.cols());

    for (std::size_t k = 0; k < nmin; ++k) {
        for (;;) {
            std::size_t pr = k, pc = k;
            if (!find_pivot(st.s, k, pr, pc)) break;
            st.swap_rows(k, pr);
            st.swap_cols(k, pc);

            bool clean = true;
            for (std::size_t i = k + 1; i < st.s.rows(); ++i) {
                if (st.s.at(i, k) == 0) continue;
                Int q = st.s.at(i, k) / st.s.at(k, k);
                st.add_row(i, k, -q);
                if (st.s.at(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < st.s.cols(); ++j) {
                if (st.s.at(k, j) == 0) continue;
                Int q = st.s.at(k, j) / st.s.at(k, k);
                st.add_col(j, k, -q);
                if (st.s.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;  // remainders left: pick a smaller pivot

            // Pivot must divide the rest of the submatrix; if not, pull the
            // offending row up and reduce again.
            bool divides = true;
            for (std::size_t i = k + 1; i < st.s.rows() && divides; ++i)
                for (std::size_t j = k + 1; j < st.s.cols(); ++j)
                    if (st.s.at(i, j) % st.s.at(k, k) != 0) {
                        st.add_row(k, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (st.s.at(k, k) < 0) st.negate_row(k);
    }

    SmithResult out{std::move(st.u), std::move(st.s), std::move(st.v), 0};
    for (std::size_t i = 0; i < nmin; ++i)
        if (out.s.at(i, i) != 0) ++out.rank;
    return out;
}

std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows()) throw ShapeError("solve_linear: dimension mismatch");
    SmithResult snf = smith_normal_form(a);
    IntVec c = snf.u.apply(b);
    IntVec y(a.cols());
    std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < nmin && snf.s.at(i, i) != 0) {
            if (c[i] % snf.s.at(i, i) != 0) return std::nullopt;
            y[i] = c[i] / snf.s.at(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    LinearSolution sol;
    sol.particular = snf.v.apply(y);
    sol.kernel = IntMatrix(a.cols(), a.cols() - snf.rank);
    for (std::size_t j = snf.rank; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) sol.kernel.at(i, j - snf.rank) = snf.v.at(i, j);
    return sol;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SmithResult snf = smith_normal_form(a);
    IntMatrix k(a.cols(), a.cols() - snf.rank);
    for (std::size_t j = snf.rank; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) k.at(i, j - snf.rank) = snf.v.at(i, j);
    return k;
}

IntMatrix column_lattice_basis(const IntMatrix& w) {
    // Column echelon form over Z by column operations only; avoids carrying
    // the (possibly very wide) column transform. Deterministic: per row the
    // smallest-magnitude nonzero entry is the pivot, lowest column index on
    // ties.
    IntMatrix a = w;
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < a.rows() && pivot < a.cols(); ++r) {
        for (;;) {
            std::size_t best = a.cols();
            for (std::size_t j = pivot; j < a.cols(); ++j) {
                if (a.at(r, j) == 0) continue;
                if (best == a.cols() || abs(a.at(r, j)) < abs(a.at(r, best))) best = j;
            }
            if (best == a.cols()) break;  // row r clear; no pivot here
            if (best != pivot)
                for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, pivot), a.at(i, best));
            bool clean = true;
            for (std::size_t j = pivot + 1; j < a.cols(); ++j) {
                if (a.at(r, j) == 0) continue;
                Int q = a.at(r, j) / a.at(r, pivot);
                for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, pivot);
                if (a.at(r, j) != 0) clean = false;
            }
            if (clean) {
                ++pivot;
                break;
            }
        }
    }
    IntMatrix basis = a.submatrix(0, 0, a.rows(), pivot);
    // sign-normalize: first nonzero entry of each column positive
    for (std::size_t j = 0; j < basis.cols(); ++j)
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            if (basis.at(i, j) == 0) continue;
            if (basis.at(i, j) < 0)
                for (std::size_t r = i; r < basis.rows(); ++r) basis.at(r, j) = -basis.at(r, j);
            break;
        }
    return basis;
}

}  // namespace mbx::exactalg
