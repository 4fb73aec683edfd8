#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symring/block_algebra.hpp"
#include "symring/dft.hpp"
#include "symring/group_ring.hpp"

namespace symring {

enum class Side { Left, Right };

/// Solves the rank-one resolvent equation inside the single block of the
/// primitive idempotent e:
///   Left:  e * b * x * e = e
///   Right: e * x * b * e = e
/// x is supported on that block only and the equation is re-checked
/// exactly before returning. Throws when e*b (resp. b*e) vanishes.
BlockAlgebraElement resolve_idempotent(const BlockAlgebraElement& e, const BlockAlgebraElement& b,
                                       Side side);

/// Generating idempotent of the minimal ideal of e*a (left: algebra*e*a,
/// built as x*e*a) or a*e (right: a*e*algebra, built as a*e*x). Verified:
/// idempotent, rank one, and spanning the same ideal slice as the product.
BlockAlgebraElement idempotent_from_product(const BlockAlgebraElement& e,
                                            const BlockAlgebraElement& a, Side side);

struct OrthogonalizedPair {
    /// Generates the same minimal ideal as e, orthogonal to etilde's ideal.
    BlockAlgebraElement f;
    /// Generates the same ideal as etilde, with f*ftilde = ftilde*f = 0.
    BlockAlgebraElement ftilde;
    /// ftilde = (1 - z) * etilde (left) or etilde * (1 - z) (right); the
    /// factor the caller applies to keep earlier summands orthogonal.
    BlockAlgebraElement z;
};

/// Two-step orthogonalization of a primitive idempotent e against an
/// idempotent etilde whose ideal does not contain e's (checked; throws a
/// containment Error otherwise). All four products f*ftilde, ftilde*f,
/// f*f - f, ftilde*ftilde - ftilde are verified zero.
OrthogonalizedPair orthogonalize(const BlockAlgebraElement& e, const BlockAlgebraElement& etilde,
                                 Side side);

struct SeedProvenance {
    size_t block = 0;      // block index in shape order
    size_t row = 0;        // which diagonal unit C_jj
    size_t generator = 0;  // which input element
};

/// Decomposition of sum_i algebra*a_i (left) or sum_i a_i*algebra (right)
/// into minimal ideals with pairwise orthogonal generating idempotents.
struct DecompositionResult {
    std::vector<BlockAlgebraElement> block_idempotents;
    /// Parallel to block_idempotents; filled by the group-ring overload.
    std::vector<GroupRingElement> ring_idempotents;
    std::vector<Partition> labels;
    std::vector<SeedProvenance> seeds;
    /// Sum of the idempotents; generates the whole ideal.
    BlockAlgebraElement total;
    std::optional<GroupRingElement> total_ring;
    /// Number of seeds examined (containment tests, including trivially
    /// zero seeds); multiplicity bounds lower this without changing the
    /// result.
    long long seed_inspections = 0;

    std::map<Partition, long long> label_multiset() const;
    /// Dimension of the decomposed ideal: sum of the block dimensions of
    /// the minimal ideals.
    long long ideal_dimension() const;
};

using MultiplicityBounds = std::map<Partition, long long>;

/// Per-block multiplicity of the ideal generated by the elements: the rank
/// of the stacked generator rows (left) or columns (right). For a single
/// idempotent both sides agree and equal the block rank.
MultiplicityBounds ideal_multiplicities(const std::vector<BlockAlgebraElement>& generators,
                                        Side side);
MultiplicityBounds ideal_multiplicities(const BlockAlgebraElement& e);

/// Splits the ideal generated by the given elements into minimal ideals.
/// Seeds run over canonical_minimal_idempotents (blocks in shape order,
/// diagonal index ascending) and, innermost, over the generators in input
/// order; a seed is kept iff it is not already inside the accumulated
/// ideal. With bounds, a block is abandoned once its multiplicity is
/// reached. All result invariants are re-verified exactly.
DecompositionResult decompose(const std::vector<BlockAlgebraElement>& generators, Side side,
                              const std::optional<MultiplicityBounds>& bounds = std::nullopt);

/// Group-ring front end: transforms the generators, decomposes, and
/// materializes every idempotent back through inverse_fourier.
DecompositionResult decompose(const std::vector<GroupRingElement>& generators, Side side,
                              const NaturalRepCache& cache,
                              const std::optional<MultiplicityBounds>& bounds = std::nullopt);

/// Generating idempotent of the (generally non-direct) sum of the ideals
/// of the generators.
BlockAlgebraElement sum_ideal_idempotent(const std::vector<BlockAlgebraElement>& generators,
                                         Side side);

/// Generating idempotent of the intersection of the ideals of the given
/// idempotents, via the annihilator of the opposite side: the complement
/// 1 - e of the annihilator's idempotent. Membership of the result in
/// every input ideal is verified.
BlockAlgebraElement intersection_idempotent(const std::vector<BlockAlgebraElement>& idempotents,
                                            Side side);

}  // namespace symring
