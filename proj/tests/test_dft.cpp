#include <random>
#include <vector>

#include "doctest.h"
#include "symring/block_algebra.hpp"
#include "symring/characters.hpp"
#include "symring/dft.hpp"
#include "symring/error.hpp"
#include "symring/group_ring.hpp"
#include "symring/matrix.hpp"
#include "symring/partition.hpp"
#include "symring/permutation.hpp"

using namespace symring;

namespace {

GroupRingElement random_element(int degree, std::mt19937& rng) {
    const auto group = enumerate_sym_group(degree);
    GroupRingElement a(degree);
    const int nterms = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < nterms; ++k) {
        const int num = static_cast<int>(rng() % 11) - 5;
        const int den = 1 + static_cast<int>(rng() % 4);
        a.add_term(group[rng() % group.size()], Rational(num) / Rational(den));
    }
    return a;
}

bool is_integer_matrix(const QMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j).get_den() != 1) return false;
    return true;
}

}  // namespace

TEST_CASE("representation matrices form an integer homomorphism") {
    const NaturalRepCache cache(4);
    const auto& shape = cache.shape();
    REQUIRE(shape.block_count() == 5);
    for (size_t b = 0; b < shape.block_count(); ++b) {
        CHECK(cache.rep_matrix(b, Permutation::identity(4)) ==
              QMatrix::identity(shape.dim(b)));
        CHECK(cache.tableaux(b).size() == shape.dim(b));
    }
    std::mt19937 rng(9001);
    const auto group = enumerate_sym_group(4);
    for (int trial = 0; trial < 30; ++trial) {
        const Permutation p = group[rng() % group.size()];
        const Permutation q = group[rng() % group.size()];
        for (size_t b = 0; b < shape.block_count(); ++b) {
            const QMatrix mp = cache.rep_matrix(b, p);
            const QMatrix mq = cache.rep_matrix(b, q);
            CHECK(is_integer_matrix(mp));
            CHECK(cache.rep_matrix(b, compose(p, q)) == mp * mq);
        }
    }
}

TEST_CASE("representation traces are the irreducible characters") {
    for (int r = 2; r <= 5; ++r) {
        const NaturalRepCache cache(r);
        for (const auto& cls : class_data(r)) {
            for (size_t b = 0; b < cache.shape().block_count(); ++b) {
                const Rational tr = cache.rep_matrix(b, cls.representative).trace();
                CHECK(tr.get_den() == 1);
                CHECK(tr.get_num().get_si() ==
                      mn_character(cache.shape().label(b), cls.type));
            }
        }
    }
}

TEST_CASE("transform of the unit is the unit") {
    for (int r = 2; r <= 4; ++r) {
        const NaturalRepCache cache(r);
        CHECK(fourier(GroupRingElement::one(r), cache) == BlockAlgebraElement::unit(r));
        CHECK(fourier(GroupRingElement::zero(r), cache).is_zero());
    }
}

TEST_CASE("transform is an algebra homomorphism") {
    const NaturalRepCache cache(4);
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_element(4, rng);
        const auto b = random_element(4, rng);
        CHECK(fourier(a * b, cache) == fourier(a, cache) * fourier(b, cache));
        CHECK(fourier(a + b, cache) == fourier(a, cache) + fourier(b, cache));
        CHECK(fourier(a * Rational(7), cache) == fourier(a, cache) * Rational(7));
    }
}

TEST_CASE("transform round-trips through its inverse") {
    std::mt19937 rng(4242);
    for (int r = 2; r <= 5; ++r) {
        const NaturalRepCache cache(r);
        for (int trial = 0; trial < 6; ++trial) {
            const auto a = random_element(r, rng);
            CHECK(inverse_fourier(fourier(a, cache), cache) == a);
        }
        CHECK(inverse_fourier(BlockAlgebraElement::unit(r), cache) ==
              GroupRingElement::one(r));
    }
}

TEST_CASE("restricting to chosen blocks leaves the others zero") {
    const NaturalRepCache cache(4);
    std::mt19937 rng(11);
    const auto a = random_element(4, rng);
    const auto full = fourier(a, cache);
    const std::vector<size_t> keep{0, 2};
    const auto part = fourier(a, cache, keep);
    for (size_t b = 0; b < cache.shape().block_count(); ++b) {
        if (b == 0 || b == 2) {
            CHECK(part.block_or_zero(b) == full.block_or_zero(b));
        } else {
            CHECK(part.block(b) == nullptr);
        }
    }
}

TEST_CASE("young subgroup sums avoid group enumeration but match it") {
    const NaturalRepCache cache(4);
    const auto group = enumerate_sym_group(4);

    auto brute = [&](auto keeps) {
        std::vector<Permutation> kept;
        for (const auto& p : group)
            if (keeps(p)) kept.push_back(p);
        return fourier(group_sum(4, kept), cache);
    };

    SUBCASE("two blocks covering everything") {
        const auto got = young_subgroup_sum_fourier(cache, {{1, 2}, {3, 4}});
        const auto want = brute([](const Permutation& p) {
            return (p(1) == 1 || p(1) == 2) && (p(2) == 1 || p(2) == 2) &&
                   (p(3) == 3 || p(3) == 4) && (p(4) == 3 || p(4) == 4);
        });
        CHECK(got == want);
    }
    SUBCASE("one block, remaining values fixed") {
        const auto got = young_subgroup_sum_fourier(cache, {{2, 3}});
        const auto want = brute([](const Permutation& p) {
            return p(1) == 1 && p(4) == 4 && (p(2) == 2 || p(2) == 3);
        });
        CHECK(got == want);
    }
    SUBCASE("no blocks gives the unit") {
        CHECK(young_subgroup_sum_fourier(cache, {}) == BlockAlgebraElement::unit(4));
    }
    SUBCASE("whole group in one block") {
        const auto got = young_subgroup_sum_fourier(cache, {{1, 2, 3, 4}});
        CHECK(got == fourier(group_sum(4, group), cache));
    }
    SUBCASE("restricted block list") {
        const std::vector<size_t> keep{1, 3};
        const auto got = young_subgroup_sum_fourier(cache, {{1, 2}, {3, 4}}, keep);
        const auto full = young_subgroup_sum_fourier(cache, {{1, 2}, {3, 4}});
        for (size_t b = 0; b < cache.shape().block_count(); ++b) {
            if (b == 1 || b == 3) {
                CHECK(got.block_or_zero(b) == full.block_or_zero(b));
            } else {
                CHECK(got.block(b) == nullptr);
            }
        }
    }
}

TEST_CASE("cache construction refuses degrees beyond the guard") {
    CHECK_THROWS_AS(NaturalRepCache(kDegreeGuard + 1), GuardError);
    CHECK_NOTHROW(NaturalRepCache(3, 3));
}
