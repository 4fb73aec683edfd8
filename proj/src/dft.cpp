#include "symring/dft.hpp"

#include <algorithm>

#include "symring/error.hpp"

namespace symring {

NaturalRepCache::NaturalRepCache(int degree, int guard)
    : degree_(degree), shape_(BlockShape::of(degree)) {
    if (degree > guard) {
        throw GuardError("refusing representation matrices for S_" + std::to_string(degree) +
                         " (guard is " + std::to_string(guard) + ")");
    }
    blocks_.resize(shape_->block_count());
    for (size_t b = 0; b < shape_->block_count(); ++b) {
        RepBlock& blk = blocks_[b];
        const Partition& lam = shape_->label(b);
        blk.tabs = standard_tableaux(lam);
        if (blk.tabs.size() != shape_->dim(b)) {
            throw Error("representation: tableau count disagrees with hook-length dimension");
        }
        for (const StandardTableau& t : blk.tabs) blk.relabel.emplace_back(t.row_word());

        size_t offset = 0;
        for (int part : lam.parts()) {
            blk.row_begin.push_back(offset);
            offset += static_cast<size_t>(part);
        }
        blk.row_begin.push_back(offset);

        // The row-filled tableau has value k+1 in row-major cell k, so the
        // cell values of v applied to it are just v's images.
        for (const Permutation& v : column_stabilizer(row_filled_tableau(lam))) {
            blk.ref_terms.emplace_back(sign(v), v.images());
        }

        // Standard tableau rows are sorted, so the row word is already the
        // canonical tabloid key.
        for (size_t i = 0; i < blk.tabs.size(); ++i) {
            blk.std_tabloids.emplace(blk.relabel[i].images(), i);
        }

        blk.bsq_inv = inverse(restricted_columns(b, blk.relabel));
    }
}

const std::vector<StandardTableau>& NaturalRepCache::tableaux(size_t block) const {
    return blocks_.at(block).tabs;
}

QMatrix NaturalRepCache::restricted_columns(size_t block,
                                            const std::vector<Permutation>& relabels) const {
    const RepBlock& blk = blocks_[block];
    const size_t f = shape_->dim(block);
    QMatrix w(f, relabels.size());
    std::vector<int> key(static_cast<size_t>(degree_));
    for (size_t j = 0; j < relabels.size(); ++j) {
        const Permutation& g = relabels[j];
        for (const auto& [sgn, cells] : blk.ref_terms) {
            for (size_t k = 0; k < cells.size(); ++k) key[k] = g(cells[k]);
            for (size_t row = 0; row + 1 < blk.row_begin.size(); ++row) {
                std::sort(key.begin() + static_cast<std::ptrdiff_t>(blk.row_begin[row]),
                          key.begin() + static_cast<std::ptrdiff_t>(blk.row_begin[row + 1]));
            }
            const auto it = blk.std_tabloids.find(key);
            if (it != blk.std_tabloids.end()) w.at(it->second, j) += sgn;
        }
    }
    return w;
}

QMatrix NaturalRepCache::rep_matrix(size_t block, const Permutation& p) const {
    if (p.degree() != degree_) throw Error("representation: permutation degree mismatch");
    const RepBlock& blk = blocks_.at(block);
    std::vector<Permutation> relabels;
    relabels.reserve(blk.relabel.size());
    for (const Permutation& g : blk.relabel) relabels.push_back(compose(p, g));
    return blk.bsq_inv * restricted_columns(block, relabels);
}

namespace {

BlockAlgebraElement fourier_impl(const GroupRingElement& a, const NaturalRepCache& cache,
                                 const std::vector<size_t>& blocks) {
    if (a.degree() != cache.degree()) throw Error("fourier: degree mismatch");
    BlockAlgebraElement out(cache.shape_ptr());
    for (size_t b : blocks) {
        const size_t d = cache.shape().dim(b);
        QMatrix acc(d, d);
        for (const auto& [p, c] : a.terms()) acc += cache.rep_matrix(b, p) * c;
        out.set_block(b, std::move(acc));
    }
    return out;
}

}  // namespace

BlockAlgebraElement fourier(const GroupRingElement& a, const NaturalRepCache& cache) {
    std::vector<size_t> all(cache.shape().block_count());
    for (size_t b = 0; b < all.size(); ++b) all[b] = b;
    return fourier_impl(a, cache, all);
}

BlockAlgebraElement fourier(const GroupRingElement& a, const NaturalRepCache& cache,
                            const std::vector<size_t>& only_blocks) {
    return fourier_impl(a, cache, only_blocks);
}

GroupRingElement inverse_fourier(const BlockAlgebraElement& a, const NaturalRepCache& cache) {
    if (a.degree() != cache.degree()) throw Error("inverse fourier: degree mismatch");
    const int r = cache.degree();
    Rational fact = 1;
    for (int k = 2; k <= r; ++k) fact *= k;

    std::vector<size_t> present;
    std::vector<QMatrix> target, current;
    std::vector<Rational> dim_over_fact;
    for (const auto& [b, m] : a.stored_blocks()) {
        present.push_back(b);
        target.push_back(m);
        current.push_back(QMatrix::identity(cache.shape().dim(b)));
        dim_over_fact.push_back(Rational(static_cast<long>(cache.shape().dim(b))) / fact);
    }
    std::vector<std::vector<QMatrix>> adj(present.size());
    for (size_t i = 0; i < present.size(); ++i) {
        for (int k = 1; k < r; ++k) {
            adj[i].push_back(cache.rep_matrix(present[i], Permutation::transposition(r, k, k + 1)));
        }
    }

    GroupRingElement out(r);
    // current[i] tracks rho(q^{-1}); q -> q s_k inverts to s_k q^{-1}.
    plain_changes(r, [&](const Permutation& q, int k) {
        if (k >= 1) {
            for (size_t i = 0; i < present.size(); ++i) {
                current[i] = adj[i][static_cast<size_t>(k - 1)] * current[i];
            }
        }
        Rational coeff = 0;
        for (size_t i = 0; i < present.size(); ++i) {
            coeff += dim_over_fact[i] * trace_product(current[i], target[i]);
        }
        out.add_term(q, coeff);
    });
    return out;
}

namespace {

BlockAlgebraElement young_sum_impl(const NaturalRepCache& cache,
                                   std::vector<std::vector<int>> value_blocks,
                                   const std::vector<size_t>& blocks) {
    const int r = cache.degree();
    std::vector<char> seen(static_cast<size_t>(r), 0);
    for (auto& vb : value_blocks) {
        std::sort(vb.begin(), vb.end());
        for (int v : vb) {
            if (v < 1 || v > r) throw Error("young subgroup: value out of range");
            if (seen[static_cast<size_t>(v - 1)]++) throw Error("young subgroup: repeated value");
        }
    }
    BlockAlgebraElement f(cache.shape_ptr());
    for (size_t b : blocks) f.set_block(b, QMatrix::identity(cache.shape().dim(b)));
    for (const auto& vb : value_blocks) {
        for (size_t k = 1; k < vb.size(); ++k) {
            GroupRingElement stage = GroupRingElement::one(r);
            for (size_t i = 0; i < k; ++i) {
                stage.add_term(Permutation::transposition(r, vb[i], vb[k]), 1);
            }
            f = fourier(stage, cache, blocks) * f;
        }
    }
    return f;
}

}  // namespace

BlockAlgebraElement young_subgroup_sum_fourier(const NaturalRepCache& cache,
                                               std::vector<std::vector<int>> value_blocks) {
    std::vector<size_t> all(cache.shape().block_count());
    for (size_t b = 0; b < all.size(); ++b) all[b] = b;
    return young_sum_impl(cache, std::move(value_blocks), all);
}

BlockAlgebraElement young_subgroup_sum_fourier(const NaturalRepCache& cache,
                                               std::vector<std::vector<int>> value_blocks,
                                               const std::vector<size_t>& only_blocks) {
    return young_sum_impl(cache, std::move(value_blocks), only_blocks);
}

}  // namespace symring
