#include <random>
#include <vector>

#include "doctest.h"
#include "symring/block_algebra.hpp"
#include "symring/error.hpp"
#include "symring/matrix.hpp"
#include "symring/partition.hpp"

using namespace symring;

namespace {

BlockAlgebraElement random_block_element(int degree, std::mt19937& rng) {
    BlockAlgebraElement x(degree);
    const auto& shape = x.shape();
    for (size_t b = 0; b < shape.block_count(); ++b) {
        if (rng() % 3 == 0) continue;  // leave some blocks zero
        QMatrix m(shape.dim(b), shape.dim(b));
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = Rational(static_cast<int>(rng() % 7) - 3);
        x.set_block(b, std::move(m));
    }
    return x;
}

/// Flattens all blocks (dense) into one coordinate row of a matrix.
void flatten_into(const BlockAlgebraElement& x, QMatrix& target, size_t row) {
    size_t col = 0;
    for (size_t b = 0; b < x.shape().block_count(); ++b) {
        const QMatrix m = x.block_or_zero(b);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) target.at(row, col++) = m.at(i, j);
    }
}

size_t total_coords(const BlockShape& shape) {
    size_t n = 0;
    for (size_t b = 0; b < shape.block_count(); ++b) n += shape.dim(b) * shape.dim(b);
    return n;
}

}  // namespace

TEST_CASE("shape of the degree-4 block decomposition") {
    const auto shape = BlockShape::of(4);
    REQUIRE(shape->block_count() == 5);
    CHECK(shape->labels() == enumerate_partitions(4));
    const size_t want_dims[] = {1, 3, 2, 3, 1};
    size_t total = 0;
    for (size_t b = 0; b < 5; ++b) {
        CHECK(shape->dim(b) == want_dims[b]);
        CHECK(shape->dim(b) == static_cast<size_t>(dimension(shape->label(b))));
        CHECK(shape->index_of(shape->label(b)) == b);
        total += shape->dim(b) * shape->dim(b);
    }
    CHECK(total == 24);
    CHECK_THROWS_AS(shape->index_of(Partition({5})), Error);
}

TEST_CASE("zero blocks are never stored") {
    BlockAlgebraElement x(4);
    CHECK(x.is_zero());
    x.set_block(2, QMatrix(2, 2));  // explicit zero matrix
    CHECK(x.is_zero());
    CHECK(x.block(2) == nullptr);
    QMatrix m(2, 2);
    m.at(0, 1) = Rational(5);
    x.set_block(2, m);
    CHECK_FALSE(x.is_zero());
    x.add_block(2, m * Rational(-1));
    CHECK(x.is_zero());
    CHECK(x.stored_blocks().empty());
    CHECK_THROWS_AS(x.set_block(2, QMatrix(3, 3)), Error);  // wrong size
}

TEST_CASE("canonical storage makes equality structural") {
    BlockAlgebraElement a(4), b(4);
    QMatrix m(3, 3);
    m.at(1, 1) = Rational(2);
    a.set_block(1, m);
    b.add_block(1, m * Rational(3));
    b.add_block(1, m * Rational(-2));
    CHECK(a == b);
    CHECK(a.block_or_zero(0) == QMatrix(1, 1));
}

TEST_CASE("the unit carries an identity matrix in every block") {
    const auto u = BlockAlgebraElement::unit(4);
    for (size_t b = 0; b < u.shape().block_count(); ++b) {
        CHECK(u.block_or_zero(b) == QMatrix::identity(u.shape().dim(b)));
    }
    std::mt19937 rng(5);
    const auto x = random_block_element(4, rng);
    CHECK(x * u == x);
    CHECK(u * x == x);
}

TEST_CASE("arithmetic is blockwise") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_block_element(4, rng);
        const auto b = random_block_element(4, rng);
        const auto prod = a * b;
        const auto sum = a + b;
        for (size_t blk = 0; blk < a.shape().block_count(); ++blk) {
            CHECK(prod.block_or_zero(blk) == a.block_or_zero(blk) * b.block_or_zero(blk));
            CHECK(sum.block_or_zero(blk) == a.block_or_zero(blk) + b.block_or_zero(blk));
        }
        CHECK(a - a == BlockAlgebraElement(4));
        CHECK((a * Rational(2)) - a - a == BlockAlgebraElement(4));
    }
}

TEST_CASE("matrix units multiply by the delta rule") {
    // within one block
    const auto e01 = matrix_unit(4, 1, 0, 1);
    const auto e12 = matrix_unit(4, 1, 1, 2);
    const auto e02 = matrix_unit(4, 1, 0, 2);
    CHECK(e01 * e12 == e02);
    CHECK((e12 * e01).is_zero());
    // across blocks everything vanishes
    const auto f00 = matrix_unit(4, 2, 0, 0);
    CHECK((e01 * f00).is_zero());
    CHECK_THROWS_AS(matrix_unit(4, 1, 3, 0), Error);  // row out of range
}

TEST_CASE("canonical minimal idempotents resolve the unit orthogonally") {
    for (int r = 2; r <= 5; ++r) {
        const auto idems = canonical_minimal_idempotents(r);
        const auto shape = BlockShape::of(r);
        size_t want = 0;
        for (size_t b = 0; b < shape->block_count(); ++b) want += shape->dim(b);
        REQUIRE(idems.size() == want);
        BlockAlgebraElement sum(r);
        for (size_t i = 0; i < idems.size(); ++i) {
            CHECK(idems[i] * idems[i] == idems[i]);
            sum += idems[i];
            for (size_t j = i + 1; j < idems.size(); ++j) {
                CHECK((idems[i] * idems[j]).is_zero());
                CHECK((idems[j] * idems[i]).is_zero());
            }
        }
        CHECK(sum == BlockAlgebraElement::unit(r));
    }
}

TEST_CASE("two-sided slice bases have the rank-product size and span") {
    std::mt19937 rng(23);
    const int r = 3;
    const auto shape = BlockShape::of(r);
    for (int trial = 0; trial < 8; ++trial) {
        const auto b = random_block_element(r, rng);
        const auto a = random_block_element(r, rng);
        const auto basis = subspace_basis(b, a);
        size_t want = 0;
        for (size_t blk = 0; blk < shape->block_count(); ++blk) {
            want += rank(b.block_or_zero(blk)) * rank(a.block_or_zero(blk));
        }
        CHECK(basis.size() == want);
        if (want == 0) continue;

        // brute-force span of {b * E * a} over all matrix units E
        std::vector<BlockAlgebraElement> gens;
        for (size_t blk = 0; blk < shape->block_count(); ++blk) {
            for (size_t i = 0; i < shape->dim(blk); ++i)
                for (size_t j = 0; j < shape->dim(blk); ++j)
                    gens.push_back(b * matrix_unit(r, blk, i, j) * a);
        }
        const size_t width = total_coords(*shape);
        QMatrix brute(gens.size(), width);
        for (size_t g = 0; g < gens.size(); ++g) flatten_into(gens[g], brute, g);
        CHECK(rank(brute) == want);

        // the returned basis is independent and lies inside that span
        QMatrix stacked(gens.size() + basis.size(), width);
        for (size_t g = 0; g < gens.size(); ++g) flatten_into(gens[g], stacked, g);
        for (size_t k = 0; k < basis.size(); ++k)
            flatten_into(basis[k], stacked, gens.size() + k);
        CHECK(rank(stacked) == want);

        QMatrix own(basis.size(), width);
        for (size_t k = 0; k < basis.size(); ++k) flatten_into(basis[k], own, k);
        CHECK(rank(own) == basis.size());
    }
}
