#include <doctest.h>

#include <random>

#include "core/intmatrix.hpp"

using namespace mbx::exactalg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = static_cast<long long>(rng() % (2 * spread + 1)) - spread;
    return m;
}

Int det3(const IntMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    if (m.rows() == 1) return m.at(0, 0);
    if (m.rows() == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Int d = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        Int minor = m.at(1, (j + 1) % 3) * m.at(2, (j + 2) % 3) -
                    m.at(1, (j + 2) % 3) * m.at(2, (j + 1) % 3);
        d += m.at(0, j) * minor;
    }
    return d;
}

// cofactor-expansion determinant, any size (test oracle)
Int det(const IntMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n <= 3) return det3(m);
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * det(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

Int gcd_of_entries(const IntMatrix& m) {
    Int g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g = gcd(g, m.at(i, j));
    return g;
}

}  // namespace

TEST_CASE("smith normal form of the zero and identity matrices") {
    auto z = smith_normal_form(IntMatrix(2, 2));
    CHECK(z.s.is_zero());
    CHECK(z.u.is_identity());
    CHECK(z.v.is_identity());
    auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.s.is_identity());
    CHECK(id.rank == 3);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
    auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    auto snf = smith_normal_form(m);
    // d1 = gcd of all entries, d1*d2 = |det|
    CHECK(snf.s.at(0, 0) == gcd_of_entries(m));
    CHECK(snf.s.at(0, 0) * snf.s.at(1, 1) == abs(det(m)));
    CHECK(snf.s.at(0, 0) == 2);
    CHECK(snf.s.at(1, 1) == 4);
    CHECK(snf.u * m * snf.v == snf.s);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, r, c, 9);
        auto snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.s);
        CHECK(abs(det(snf.u)) == 1);
        CHECK(abs(det(snf.v)) == 1);
        auto d = snf.diagonal();
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (i + 1 < d.size() && d[i + 1] != 0) {
                CHECK(d[i] != 0);
                CHECK(d[i + 1] % d[i] == 0);
            }
        }
        for (std::size_t i = 0; i < snf.s.rows(); ++i)
            for (std::size_t j = 0; j < snf.s.cols(); ++j)
                if (i != j) CHECK(snf.s.at(i, j) == 0);
    }
}

TEST_CASE("solve_linear examples") {
    auto a = IntMatrix::from_rows({{2}});
    auto sol = solve_linear(a, {Int(4)});
    REQUIRE(sol);
    CHECK(sol->particular == IntVec{Int(2)});
    CHECK(sol->kernel.cols() == 0);
    CHECK_FALSE(solve_linear(a, {Int(3)}));

    auto zero_map = IntMatrix(1, 2);
    auto sol2 = solve_linear(zero_map, {Int(0)});
    REQUIRE(sol2);
    CHECK(sol2->particular == IntVec{Int(0), Int(0)});
    CHECK(sol2->kernel.cols() == 2);
}

TEST_CASE("solve_linear finds solutions and kernels on random systems") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix a = random_matrix(rng, r, c, 6);
        IntVec x(c);
        for (auto& e : x) e = static_cast<long long>(rng() % 9) - 4;
        IntVec b = a.apply(x);
        auto sol = solve_linear(a, b);
        REQUIRE(sol);
        CHECK(a.apply(sol->particular) == b);
        for (std::size_t j = 0; j < sol->kernel.cols(); ++j) {
            IntVec kv = sol->kernel.column(j);
            IntVec z(a.rows());
            CHECK(a.apply(kv) == z);
        }
    }
}

TEST_CASE("column lattice basis spans the same lattice") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        IntMatrix w = random_matrix(rng, r, c, 5);
        IntMatrix basis = column_lattice_basis(w);
        // every original column solves over the basis and vice versa
        for (std::size_t j = 0; j < w.cols(); ++j) CHECK(solve_linear(basis, w.column(j)));
        for (std::size_t j = 0; j < basis.cols(); ++j) CHECK(solve_linear(w, basis.column(j)));
        // basis columns are independent: trivial kernel
        CHECK(integer_kernel(basis).cols() == 0);
    }
}
