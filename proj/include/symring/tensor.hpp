#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symring/block_algebra.hpp"
#include "symring/characters.hpp"
#include "symring/dft.hpp"
#include "symring/group_ring.hpp"
#include "symring/ideal_decomp.hpp"

namespace symring {

/// Dense order-r tensor over a d-dimensional space, d^r exact rational
/// coordinates in row-major order. Index values are 0-based (0..d-1).
class TensorDense {
public:
    TensorDense(int order, int dim);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::vector<Rational>& coordinates() const { return coords_; }
    std::vector<Rational>& coordinates() { return coords_; }

    size_t offset(const std::vector<int>& idx) const;
    Rational& at(const std::vector<int>& idx) { return coords_[offset(idx)]; }
    const Rational& at(const std::vector<int>& idx) const { return coords_[offset(idx)]; }

    bool is_zero() const;

    TensorDense& operator+=(const TensorDense& other);
    TensorDense& operator-=(const TensorDense& other);
    TensorDense& operator*=(const Rational& c);

    friend TensorDense operator+(TensorDense a, const TensorDense& b) {
        a += b;
        return a;
    }
    friend TensorDense operator-(TensorDense a, const TensorDense& b) {
        a -= b;
        return a;
    }
    friend TensorDense operator*(TensorDense a, const Rational& c) {
        a *= c;
        return a;
    }

    friend bool operator==(const TensorDense&, const TensorDense&) = default;

private:
    int order_;
    int dim_;
    std::vector<Rational> coords_;
};

/// Diagonal metric values g(n_i, n_i) of an orthonormal basis; each +1/-1.
class MetricSignature {
public:
    explicit MetricSignature(std::vector<int> entries);

    static MetricSignature euclidean(int dim);

    int dim() const { return static_cast<int>(entries_.size()); }
    /// g(n_i, n_i) for a 0-based basis index.
    int value(int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

private:
    std::vector<int> entries_;
};

/// An l-fold index-pair contraction pattern on order-r tensors: pairs sit
/// in slots (1,2), (3,4), ..., (2l-1,2l) and the remaining r-2l slots are
/// fixed to the basis indices b0.
struct ContractionSpec {
    int r = 0;
    int l = 0;
    std::vector<int> b0;

    /// 2 <= 2l <= r, |b0| = r-2l, entries within [0, dim).
    void validate(int dim) const;
};

/// The function p -> T(v_{b_{p(1)}}, ..., v_{b_{p(r)}}) as a group-ring
/// element over S_r.
GroupRingElement t_b(const TensorDense& T, const std::vector<int>& b, int guard = kDegreeGuard);

/// Symmetry operator: (aT)(v_1..v_r) = sum_p a(p) T(v_{p(1)}..v_{p(r)}).
TensorDense apply_operator(const GroupRingElement& a, const TensorDense& T);

/// True iff apply_operator(e, T) == T exactly.
bool membership(const GroupRingElement& e, const TensorDense& T);

/// The left ideal of all T_b of tensors satisfying the linear identities
/// a_i T = 0: the left annihilator of {star(a_i)}, realized as the
/// complement of the right ideal the starred generators span.
struct SymmetryIdeal {
    /// Generating idempotent of the class ideal (zero iff empty_class).
    GroupRingElement idempotent;
    BlockAlgebraElement idempotent_blocks;
    /// Minimal-left-ideal split of the class ideal.
    DecompositionResult components;
    /// The identities wipe out every tensor; the ideal is zero.
    bool empty_class = false;
};

SymmetryIdeal symmetry_ideal_from_identities(const std::vector<GroupRingElement>& generators,
                                             const NaturalRepCache& cache);

/// The permutation of {1..degree} acting as s on the window
/// offset+1 .. offset+deg(s) and fixing everything else.
Permutation embed_permutation(const Permutation& s, int degree, int offset);

/// Termwise embedding of a group-ring element through embed_permutation.
GroupRingElement embed_element(const GroupRingElement& a, int degree, int offset);

/// The copy of S_n inside S_{m*n} that moves the n value windows of width
/// m rigidly: value k*m-j goes to s(k)*m-j.
std::vector<Permutation> block_copy_group(int m, int n, int guard = kDegreeGuard);

/// Constituent multiset of a product ideal: the Littlewood-Richardson
/// product of the factors' constituent multisets.
SchurExpansion product_ideal_constituents(const std::vector<SchurExpansion>& factors);

/// Constituent multiset of an n-th power ideal: the symmetrized power
/// (plethysm with [n]) of the base multiset.
SchurExpansion power_ideal_constituents(const SchurExpansion& base, int n);

/// sum of dimension(lambda) * multiplicity over a constituent multiset.
long long constituents_dimension(const SchurExpansion& m);

/// An ideal assembled from smaller symmetric groups, with its minimal
/// decomposition and the character-level prediction of its constituents.
/// The two routes are compared exactly during construction.
struct CompositeIdeal {
    GroupRingElement idempotent;
    BlockAlgebraElement idempotent_blocks;
    DecompositionResult decomposition;
    SchurExpansion expected_constituents;
};

/// Ideal of tensor products: factors (r_i, e_i) are embedded side by side
/// and the left ideal generated by the product of the embedded idempotents
/// is decomposed. cache must live at degree sum(r_i).
CompositeIdeal product_ideal(const std::vector<std::pair<int, GroupRingElement>>& factors,
                             const NaturalRepCache& cache);

/// Ideal of n-th tensor powers: n embedded copies of e0 times the averaged
/// sum over the rigid window-permutation group. cache must live at degree
/// n * deg(e0).
CompositeIdeal power_ideal(const GroupRingElement& e0, int n, const NaturalRepCache& cache);

/// Calls visit(b, gamma_b) for every paired tuple
/// b = (w1,w1,...,wl,wl,b0...) of the spec, gamma_b = prod_i g(w_i,w_i).
void for_each_paired_tuple(const ContractionSpec& spec, const MetricSignature& g,
                           const std::function<void(const std::vector<int>&, int)>& visit);

/// sum over paired tuples of gamma_b * T_b: the group-ring image of the
/// l-fold trace of pT as p varies. Recomputed independently through the
/// direct per-permutation contraction and asserted equal.
GroupRingElement contraction_sum(const TensorDense& T, const MetricSignature& g,
                                 const ContractionSpec& spec);

/// A subspace of the group algebra in block-factored form: per block,
/// everything of the form U * X * R, i.e. (column span of U) tensor
/// (row span of R). U has independent columns and R independent rows.
struct FactoredSubspace {
    std::shared_ptr<const BlockShape> shape;
    std::map<size_t, std::pair<QMatrix, QMatrix>> factors;

    long long dimension() const;
    /// The rank-one transform-domain basis elements, ordered by block,
    /// then column index of U, then row index of R.
    std::vector<BlockAlgebraElement> block_basis() const;
};

/// True iff the two subspaces coincide blockwise (exact span equality of
/// both factors' spans jointly).
bool same_subspace(const FactoredSubspace& a, const FactoredSubspace& b);

/// The universal contraction space 1_G * algebra * e for the group
/// G = H_t Q attached to the shape (2^l, 1^(r-2l)): H_t the row group of
/// its first standard tableau, Q the swaps of its length-2 rows. Contains
/// every gamma-weighted contraction sum of every tensor of e's class.
FactoredSubspace contraction_space_universal(const BlockAlgebraElement& e_blocks, int l,
                                             const NaturalRepCache& cache);

/// The span of the contraction sums when the base space has only d basis
/// directions: sum over grouping partitions lambda and smallest groupings
/// of the paired tuples of a_<lambda;w> * 1_{H_t_lambda} * algebra * e,
/// with a_<lambda;w> the gamma-weighted sum of inverse carriers.
FactoredSubspace contraction_space_dim_limited(const BlockAlgebraElement& e_blocks,
                                               const ContractionSpec& spec,
                                               const MetricSignature& g,
                                               const NaturalRepCache& cache);

enum class ContractionMode { Universal, DimLimited };

/// Ring-domain basis of the contraction space (one element per rank-one
/// transform-domain basis element). g is required in DimLimited mode.
std::vector<GroupRingElement> contraction_space(const GroupRingElement& e,
                                                const ContractionSpec& spec, ContractionMode mode,
                                                const std::optional<MetricSignature>& g,
                                                const NaturalRepCache& cache);

/// How an index tuple factors through its multiset: b = carrier applied to
/// the tuple (values[0]^lambda_0, values[1]^lambda_1, ...).
struct Grouping {
    Partition lambda;
    /// Pairwise distinct, value i repeated lambda_i times; the smallest
    /// choice: within equal parts of lambda, values ascend.
    std::vector<int> values;
    /// Lexicographically least image list with b = carrier . tuple.
    Permutation carrier;
};

/// The smallest grouping of b and its deterministic carrier.
Grouping grouping(const std::vector<int>& b);

/// The r-tuple (values[0]^lambda_0, values[1]^lambda_1, ...).
std::vector<int> grouping_tuple(const Grouping& gr);

/// Number of independent full contractions (invariants) of the tensors of
/// e's class: the total multiplicity of even-row constituents 2 mu, mu |- l,
/// in the class ideal, where the degree is r = 2l.
long long invariant_count(const BlockAlgebraElement& e_blocks);
long long invariant_count(const GroupRingElement& e, const NaturalRepCache& cache);
/// Character-level variant for a known constituent multiset.
long long invariant_count(const SchurExpansion& constituents, int l);

}  // namespace symring
