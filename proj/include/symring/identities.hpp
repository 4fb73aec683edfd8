#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symring/dft.hpp"
#include "symring/group_ring.hpp"
#include "symring/ideal_decomp.hpp"
#include "symring/tensor.hpp"

namespace symring {

/// A linear combination of tensor coordinates,
/// tau = sum_p c_p T_{i_{p(1)} ... i_{p(r)}}, optionally with the leading
/// index pairs traced out per a contraction pattern.
struct Expression {
    int r = 0;
    std::optional<ContractionSpec> contraction;
    std::map<Permutation, Rational> terms;

    friend bool operator==(const Expression& a, const Expression& b) {
        return a.r == b.r && a.terms == b.terms &&
               (a.contraction.has_value() == b.contraction.has_value());
    }
};

/// Identities supported on a fixed candidate set: vectors x over the
/// candidates with sum_p h_i(p) x_p = 0 for every basis element h_i of the
/// subspace W that carries the class's coordinate functions. Each vector,
/// read as coefficients c_p, is a linear identity valid for every tensor
/// of the class.
struct IdentityBasis {
    /// The candidate permutations, ascending; columns of the system.
    std::vector<Permutation> candidates;
    /// Echelon nullspace basis, one vector per row, length |candidates|.
    std::vector<std::vector<Rational>> vectors;
    /// Rank of W projected onto the candidate coordinates; equals
    /// |candidates| - vectors.size().
    long long w_rank = 0;
};

/// Exact nullspace of the |W-basis| x |candidates| system. An empty W
/// means every candidate coordinate vanishes; the identity space is then
/// the whole candidate space.
IdentityBasis orthogonal_identities(const std::vector<GroupRingElement>& w_basis,
                                    std::vector<Permutation> candidates);

/// Block-domain variant: h_i(p) = (1/r!) sum_blocks dim * trace of
/// rep(p^{-1}) against the factored basis element, evaluated only at the
/// candidates. Equivalent to materializing the ring basis, without the
/// full-group transform.
IdentityBasis orthogonal_identities(const FactoredSubspace& w,
                                    std::vector<Permutation> candidates,
                                    const NaturalRepCache& cache);

/// Canonical form of tau modulo the identity span. Pivots eliminate the
/// lexicographically largest permutations first, so reduced expressions
/// are supported on lexicographically small index arrangements. The map
/// is linear and idempotent, and tau minus its reduction lies in the
/// identity span. Throws when tau uses a permutation outside the
/// candidate set.
Expression reduce_expression(const Expression& tau, const IdentityBasis& ids);

/// One component of a split expression: the same term list, now read
/// against the projected tensor (projector applied to T).
struct ComponentExpression {
    /// The tensor-side projector: the starred component idempotent.
    GroupRingElement projector;
    Expression expr;
};

/// Rewrites tau over the components of a decomposition of its class
/// idempotent: tau(T) = sum_i tau(projector_i T). Each component may then
/// be reduced against its own smaller space; the reduced components
/// cannot be recombined into coordinates of T itself in general.
std::vector<ComponentExpression> split_by_idempotents(const Expression& tau,
                                                      const DecompositionResult& parts);

}  // namespace symring
