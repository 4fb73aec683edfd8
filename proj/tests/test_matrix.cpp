#include <random>

#include "doctest.h"
#include "symring/error.hpp"
#include "symring/matrix.hpp"
#include "symring/rational.hpp"

using namespace symring;

namespace {

QMatrix random_matrix(size_t rows, size_t cols, std::mt19937& rng) {
    QMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            const int num = static_cast<int>(rng() % 9) - 4;
            const int den = 1 + static_cast<int>(rng() % 3);
            m.at(i, j) = Rational(num) / Rational(den);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    QMatrix a(2, 2);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(2);
    a.at(1, 0) = Rational(3);
    a.at(1, 1) = Rational(4);
    const QMatrix id = QMatrix::identity(2);
    CHECK(a * id == a);
    CHECK(id * a == a);
    CHECK((a - a).is_zero());
    CHECK(a.trace() == Rational(5));
    CHECK(a.transposed().at(0, 1) == Rational(3));
    QMatrix b = a;
    b *= Rational(2);
    CHECK(b.at(1, 1) == Rational(8));
    CHECK_THROWS_AS(a * QMatrix(3, 3), Error);
    CHECK_THROWS_AS(a + QMatrix(3, 3), Error);
}

TEST_CASE("row reduction produces a reduced echelon form of known rank") {
    // rank-2 matrix: third row is the sum of the first two
    QMatrix m(3, 3);
    const int vals[3][3] = {{1, 2, 3}, {0, 1, 4}, {1, 3, 7}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m.at(i, j) = Rational(vals[i][j]);
    const Echelon e = rref(m);
    CHECK(e.pivot_cols.size() == 2);
    CHECK(rank(m) == 2);
    // pivots are leading ones with zeros above and below
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
        const size_t c = e.pivot_cols[r];
        CHECK(e.reduced.at(r, c) == Rational(1));
        for (size_t i = 0; i < e.reduced.rows(); ++i) {
            if (i != r) CHECK(e.reduced.at(i, c) == Rational(0));
        }
    }
    CHECK(rank(QMatrix(4, 4)) == 0);
    CHECK(rank(QMatrix::identity(5)) == 5);
}

TEST_CASE("nullspace vectors satisfy m x = 0 exactly and span the kernel") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        const QMatrix m = random_matrix(rows, cols, rng);
        const auto basis = nullspace(m);
        CHECK(basis.size() == cols - rank(m));
        for (const auto& x : basis) {
            CHECK(x.rows() == cols);
            CHECK(x.cols() == 1);
            CHECK((m * x).is_zero());
        }
        if (!basis.empty()) {
            QMatrix stacked(basis.size(), cols);
            for (size_t k = 0; k < basis.size(); ++k)
                for (size_t j = 0; j < cols; ++j) stacked.at(k, j) = basis[k].at(j, 0);
            CHECK(rank(stacked) == basis.size());
        }
    }
}

TEST_CASE("solve returns exact solutions and rejects inconsistency") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        const QMatrix m = random_matrix(rows, cols, rng);
        const QMatrix x0 = random_matrix(cols, 2, rng);
        const QMatrix rhs = m * x0;  // guaranteed consistent
        const QMatrix x = solve(m, rhs);
        CHECK(m * x == rhs);
    }
    QMatrix m(2, 1);
    m.at(0, 0) = Rational(1);
    m.at(1, 0) = Rational(1);
    QMatrix rhs(2, 1);
    rhs.at(0, 0) = Rational(1);
    rhs.at(1, 0) = Rational(2);
    CHECK_THROWS_AS(solve(m, rhs), Error);
}

TEST_CASE("row basis keeps original rows and full rank") {
    QMatrix m(3, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(4);  // dependent on row 0
    m.at(2, 0) = Rational(0);
    m.at(2, 1) = Rational(1);
    const QMatrix b = row_basis(m);
    REQUIRE(b.rows() == 2);
    CHECK(b.row(0) == m.row(0));
    CHECK(b.row(1) == m.row(2));
    CHECK(rank(b) == 2);
}

TEST_CASE("inverse round-trips and rejects singular input") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 20) {
        const QMatrix m = random_matrix(3, 3, rng);
        if (rank(m) < 3) continue;
        const QMatrix mi = inverse(m);
        CHECK(m * mi == QMatrix::identity(3));
        CHECK(mi * m == QMatrix::identity(3));
        ++done;
    }
    QMatrix sing(2, 2);
    sing.at(0, 0) = Rational(1);
    sing.at(1, 0) = Rational(1);
    CHECK_THROWS_AS(inverse(sing), Error);
    CHECK_THROWS_AS(inverse(QMatrix(2, 3)), Error);
}

TEST_CASE("trace_product agrees with the explicit product trace") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const size_t n = 1 + rng() % 4, k = 1 + rng() % 4;
        const QMatrix a = random_matrix(n, k, rng);
        const QMatrix b = random_matrix(k, n, rng);
        CHECK(trace_product(a, b) == (a * b).trace());
    }
}
