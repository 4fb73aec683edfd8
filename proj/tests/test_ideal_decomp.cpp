#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "symring/block_algebra.hpp"
#include "symring/dft.hpp"
#include "symring/error.hpp"
#include "symring/group_ring.hpp"
#include "symring/ideal_decomp.hpp"
#include "symring/matrix.hpp"
#include "symring/partition.hpp"

using namespace symring;

namespace {

BlockAlgebraElement random_block_element(int degree, std::mt19937& rng) {
    BlockAlgebraElement x(degree);
    const auto& shape = x.shape();
    for (size_t b = 0; b < shape.block_count(); ++b) {
        if (rng() % 3 == 0) continue;
        QMatrix m(shape.dim(b), shape.dim(b));
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = Rational(static_cast<int>(rng() % 7) - 3);
        x.set_block(b, std::move(m));
    }
    return x;
}

/// Left ideals are determined per block by the row space of the generator.
bool same_row_space(const QMatrix& a, const QMatrix& b) {
    const size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    QMatrix stacked(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
    return rank(stacked) == ra;
}

bool same_ideal(const BlockAlgebraElement& a, const BlockAlgebraElement& b, Side side) {
    for (size_t blk = 0; blk < a.shape().block_count(); ++blk) {
        QMatrix ma = a.block_or_zero(blk), mb = b.block_or_zero(blk);
        if (side == Side::Right) {
            ma = ma.transposed();
            mb = mb.transposed();
        }
        if (!same_row_space(ma, mb)) return false;
    }
    return true;
}

long long fact(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("resolvents satisfy their defining equation") {
    std::mt19937 rng(1);
    const auto idems = canonical_minimal_idempotents(4);
    for (const auto& e : idems) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto b = random_block_element(4, rng);
            if ((e * b).is_zero()) continue;
            const auto x = resolve_idempotent(e, b, Side::Left);
            CHECK(e * b * x * e == e);
        }
        for (int trial = 0; trial < 3; ++trial) {
            const auto b = random_block_element(4, rng);
            if ((b * e).is_zero()) continue;
            const auto x = resolve_idempotent(e, b, Side::Right);
            CHECK(e * x * b * e == e);
        }
    }
    // vanishing product is refused
    BlockAlgebraElement zero_here(4);
    QMatrix m(2, 2);
    m.at(0, 0) = Rational(1);
    zero_here.set_block(2, m);  // supported away from block 0
    CHECK_THROWS_AS(resolve_idempotent(idems[0], zero_here, Side::Left), Error);
}

TEST_CASE("products of primitive idempotents regenerate their minimal ideal") {
    std::mt19937 rng(2);
    const auto idems = canonical_minimal_idempotents(4);
    for (const auto& e : idems) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto a = random_block_element(4, rng);
            if (!(e * a).is_zero()) {
                const auto f = idempotent_from_product(e, a, Side::Left);
                CHECK(f * f == f);
                CHECK(same_ideal(f, e * a, Side::Left));
            }
            if (!(a * e).is_zero()) {
                const auto f = idempotent_from_product(e, a, Side::Right);
                CHECK(f * f == f);
                CHECK(same_ideal(f, a * e, Side::Right));
            }
        }
    }
}

TEST_CASE("orthogonalization keeps both ideals and kills both products") {
    std::mt19937 rng(3);
    const auto idems = canonical_minimal_idempotents(4);
    // a primitive idempotent in the 3-dimensional block, and a second
    // primitive one generating a different line of the same block
    const auto& e = idems[1];  // block (3,1), first diagonal unit
    int built = 0;
    for (int trial = 0; trial < 20 && built < 4; ++trial) {
        const auto a = random_block_element(4, rng);
        if ((idems[2] * a).is_zero()) continue;
        const auto etilde = idempotent_from_product(idems[2], a, Side::Left);
        if (same_ideal(etilde, e, Side::Left)) continue;
        ++built;
        const OrthogonalizedPair pair = orthogonalize(e, etilde, Side::Left);
        CHECK((pair.f * pair.ftilde).is_zero());
        CHECK((pair.ftilde * pair.f).is_zero());
        CHECK(pair.f * pair.f == pair.f);
        CHECK(pair.ftilde * pair.ftilde == pair.ftilde);
        CHECK(same_ideal(pair.f, e, Side::Left));
        CHECK(same_ideal(pair.ftilde, etilde, Side::Left));
        // the recorded factor reproduces ftilde
        CHECK((BlockAlgebraElement::unit(4) - pair.z) * etilde == pair.ftilde);
    }
    CHECK(built > 0);
    // containment is refused: e's ideal lies inside etilde = e itself
    CHECK_THROWS_AS(orthogonalize(e, e, Side::Left), Error);
}

TEST_CASE("decomposing the whole algebra yields one ideal per tableau") {
    const long long want_counts[] = {0, 1, 2, 4, 10, 26};
    for (int r = 3; r <= 5; ++r) {
        const auto result =
            decompose(std::vector<BlockAlgebraElement>{BlockAlgebraElement::unit(r)},
                      Side::Left);
        CHECK(static_cast<long long>(result.block_idempotents.size()) == want_counts[r]);
        CHECK(result.total == BlockAlgebraElement::unit(r));
        CHECK(result.ideal_dimension() == fact(r));
        // one ideal of label lambda per standard tableau
        std::map<Partition, long long> want;
        for (const auto& lam : enumerate_partitions(r)) want[lam] = dimension(lam);
        CHECK(result.label_multiset() == want);
        // pairwise orthogonal, each idempotent
        for (size_t i = 0; i < result.block_idempotents.size(); ++i) {
            const auto& ei = result.block_idempotents[i];
            CHECK(ei * ei == ei);
            CHECK(result.labels[i] == result.block_idempotents[i].shape().label(
                                          result.seeds[i].block));
            for (size_t j = i + 1; j < result.block_idempotents.size(); ++j) {
                CHECK((ei * result.block_idempotents[j]).is_zero());
                CHECK((result.block_idempotents[j] * ei).is_zero());
            }
        }
    }
}

TEST_CASE("the group-ring front end materializes orthogonal ring idempotents") {
    const NaturalRepCache cache(3);
    const auto result = decompose(std::vector<GroupRingElement>{GroupRingElement::one(3)},
                                  Side::Left, cache);
    REQUIRE(result.ring_idempotents.size() == 4);
    REQUIRE(result.total_ring.has_value());
    GroupRingElement sum(3);
    for (size_t i = 0; i < result.ring_idempotents.size(); ++i) {
        const auto& ei = result.ring_idempotents[i];
        CHECK(ei * ei == ei);
        CHECK(fourier(ei, cache) == result.block_idempotents[i]);
        sum += ei;
        for (size_t j = i + 1; j < result.ring_idempotents.size(); ++j) {
            CHECK((ei * result.ring_idempotents[j]).is_zero());
        }
    }
    CHECK(sum == GroupRingElement::one(3));
    CHECK(*result.total_ring == GroupRingElement::one(3));
    CHECK(result.label_multiset() ==
          std::map<Partition, long long>{{Partition({3}), 1},
                                         {Partition({2, 1}), 2},
                                         {Partition({1, 1, 1}), 1}});
}

TEST_CASE("full symmetrization and antisymmetrization are already minimal") {
    for (int r = 2; r <= 4; ++r) {
        const NaturalRepCache cache(r);
        const auto group = enumerate_sym_group(r);
        const Rational inv_order = Rational(1) / Rational(static_cast<int>(group.size()));
        std::vector<int> ones(static_cast<size_t>(r), 1);

        const auto sym = decompose(
            std::vector<GroupRingElement>{group_sum(r, group) * inv_order}, Side::Left, cache);
        CHECK(sym.label_multiset() ==
              std::map<Partition, long long>{{Partition({r}), 1}});
        CHECK(sym.ideal_dimension() == 1);

        const auto alt =
            decompose(std::vector<GroupRingElement>{signed_group_sum(r, group) * inv_order},
                      Side::Left, cache);
        CHECK(alt.label_multiset() ==
              std::map<Partition, long long>{{Partition(ones), 1}});
    }
}

TEST_CASE("decomposition labels equal the rank multiplicities") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<BlockAlgebraElement> gens{random_block_element(4, rng),
                                              random_block_element(4, rng)};
        for (Side side : {Side::Left, Side::Right}) {
            const auto mult = ideal_multiplicities(gens, side);
            const auto result = decompose(gens, side);
            std::map<Partition, long long> nonzero;
            for (const auto& [lam, m] : mult)
                if (m > 0) nonzero[lam] = m;
            CHECK(result.label_multiset() == nonzero);
            // generators live inside the ideal of the total idempotent
            for (const auto& g : gens) {
                if (side == Side::Left) {
                    CHECK(g * result.total == g);
                } else {
                    CHECK(result.total * g == g);
                }
            }
        }
    }
}

TEST_CASE("multiplicity bounds cut the search without changing the result") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<BlockAlgebraElement> gens{random_block_element(4, rng)};
        const auto plain = decompose(gens, Side::Left);
        const auto bounded = decompose(gens, Side::Left, ideal_multiplicities(gens, Side::Left));
        CHECK(bounded.block_idempotents == plain.block_idempotents);
        CHECK(bounded.labels == plain.labels);
        CHECK(bounded.seed_inspections <= plain.seed_inspections);
    }
}

TEST_CASE("single-idempotent multiplicities are the block ranks") {
    std::mt19937 rng(6);
    const auto e = sum_ideal_idempotent({random_block_element(4, rng)}, Side::Left);
    const auto mult = ideal_multiplicities(e);
    for (size_t b = 0; b < e.shape().block_count(); ++b) {
        const auto it = mult.find(e.shape().label(b));
        const long long want = static_cast<long long>(rank(e.block_or_zero(b)));
        CHECK((it == mult.end() ? 0 : it->second) == want);
    }
}

TEST_CASE("sum ideals contain every generator") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<BlockAlgebraElement> gens{random_block_element(4, rng),
                                              random_block_element(4, rng),
                                              random_block_element(4, rng)};
        const auto e_left = sum_ideal_idempotent(gens, Side::Left);
        CHECK(e_left * e_left == e_left);
        for (const auto& g : gens) CHECK(g * e_left == g);
        const auto mult = ideal_multiplicities(gens, Side::Left);
        CHECK(ideal_multiplicities(e_left) == mult);

        const auto e_right = sum_ideal_idempotent(gens, Side::Right);
        CHECK(e_right * e_right == e_right);
        for (const auto& g : gens) CHECK(e_right * g == g);
    }
}

TEST_CASE("intersection idempotents generate exactly the common ideal") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        const auto e1 = sum_ideal_idempotent({random_block_element(4, rng)}, Side::Left);
        const auto e2 = sum_ideal_idempotent({random_block_element(4, rng)}, Side::Left);
        const auto g = intersection_idempotent({e1, e2}, Side::Left);
        CHECK(g * g == g);
        CHECK(g * e1 == g);  // g lies in the left ideal of e1
        CHECK(g * e2 == g);
        // blockwise dimension formula for intersecting row spaces
        for (size_t b = 0; b < g.shape().block_count(); ++b) {
            const QMatrix m1 = e1.block_or_zero(b), m2 = e2.block_or_zero(b);
            QMatrix stacked(m1.rows() + m2.rows(), m1.cols());
            for (size_t i = 0; i < m1.rows(); ++i)
                for (size_t j = 0; j < m1.cols(); ++j) stacked.at(i, j) = m1.at(i, j);
            for (size_t i = 0; i < m2.rows(); ++i)
                for (size_t j = 0; j < m2.cols(); ++j)
                    stacked.at(m1.rows() + i, j) = m2.at(i, j);
            const size_t want = rank(m1) + rank(m2) - rank(stacked);
            CHECK(rank(g.block_or_zero(b)) == want);
        }
    }
}
