#pragma once

#include <map>
#include <memory>
#include <vector>

#include "symring/block_algebra.hpp"
#include "symring/group_ring.hpp"
#include "symring/matrix.hpp"
#include "symring/tableau.hpp"

namespace symring {

/// Young's natural (Specht) representation of S_r, one integer matrix
/// representation per partition of r. The basis of block lambda is the
/// standard polytabloids e_t, t running over standard_tableaux(lambda).
///
/// rho(p) is built column by column: p.e_{t_j} = e_{p t_j} is expanded in
/// tabloid coordinates restricted to the tabloids {t_i} of the standard
/// tableaux themselves; that square matrix is invertible because {t}
/// occurs in e_t exactly once and every other tabloid of e_t is
/// dominance-smaller, so the restricted system has the full solution.
class NaturalRepCache {
public:
    explicit NaturalRepCache(int degree, int guard = kDegreeGuard);

    int degree() const { return degree_; }
    const BlockShape& shape() const { return *shape_; }
    std::shared_ptr<const BlockShape> shape_ptr() const { return shape_; }
    const std::vector<StandardTableau>& tableaux(size_t block) const;

    /// rho_block(p), an integer matrix of size dim(block).
    QMatrix rep_matrix(size_t block, const Permutation& p) const;

private:
    struct RepBlock {
        /// Relabeling taking the row-filled tableau to standard tableau j.
        std::vector<Permutation> relabel;
        std::vector<StandardTableau> tabs;
        /// (sign, cell values in row-major order) for each column-group
        /// element applied to the row-filled tableau.
        std::vector<std::pair<int, std::vector<int>>> ref_terms;
        /// Row-major offsets of row starts, for tabloid canonicalization.
        std::vector<size_t> row_begin;
        /// Canonical tabloid key of {t_i} -> i.
        std::map<std::vector<int>, size_t> std_tabloids;
        QMatrix bsq_inv;
    };

    /// Polytabloid coordinates of e_{relabel . rowfilled} at the standard
    /// tabloids, one column per relabeling.
    QMatrix restricted_columns(size_t block, const std::vector<Permutation>& relabels) const;

    int degree_;
    std::shared_ptr<const BlockShape> shape_;
    std::vector<RepBlock> blocks_;
};

/// A_lambda = sum_p a(p) rho_lambda(p) for every block.
BlockAlgebraElement fourier(const GroupRingElement& a, const NaturalRepCache& cache);

/// Same restricted to the listed blocks; the others are left zero.
BlockAlgebraElement fourier(const GroupRingElement& a, const NaturalRepCache& cache,
                            const std::vector<size_t>& only_blocks);

/// a(q) = (1/r!) sum_lambda dim(lambda) trace(rho_lambda(q^{-1}) A_lambda).
/// Walks the group in plain-changes order so each step costs one adjacent
/// update per stored block.
GroupRingElement inverse_fourier(const BlockAlgebraElement& a, const NaturalRepCache& cache);

/// Transform of the unit-coefficient sum over the Young subgroup fixing the
/// given value blocks (values absent from every block are fixed points).
/// Built by the coset chain sum(S_k) = (id + sum_{i<k} (b_i b_k)) sum(S_{k-1})
/// so the group is never enumerated.
BlockAlgebraElement young_subgroup_sum_fourier(const NaturalRepCache& cache,
                                               std::vector<std::vector<int>> value_blocks);
BlockAlgebraElement young_subgroup_sum_fourier(const NaturalRepCache& cache,
                                               std::vector<std::vector<int>> value_blocks,
                                               const std::vector<size_t>& only_blocks);

}  // namespace symring
