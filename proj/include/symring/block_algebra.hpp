#pragma once

#include <map>
#include <memory>
#include <vector>

#include "symring/matrix.hpp"
#include "symring/partition.hpp"

namespace symring {

/// Shape of the block decomposition of the degree-r group algebra: one
/// square block per partition of r, blocks in reverse-lexicographic
/// partition order, block sizes the standard-tableau counts.
class BlockShape {
public:
    static std::shared_ptr<const BlockShape> of(int degree);

    int degree() const { return degree_; }
    size_t block_count() const { return labels_.size(); }
    const std::vector<Partition>& labels() const { return labels_; }
    const Partition& label(size_t b) const { return labels_[b]; }
    size_t dim(size_t b) const { return dims_[b]; }
    size_t index_of(const Partition& lambda) const;

private:
    explicit BlockShape(int degree);
    int degree_;
    std::vector<Partition> labels_;
    std::vector<size_t> dims_;
};

/// Element of the block algebra: a square rational matrix per block.
/// Blocks that are zero are not stored, so the representation is canonical
/// and equality is map equality.
class BlockAlgebraElement {
public:
    explicit BlockAlgebraElement(std::shared_ptr<const BlockShape> shape);
    explicit BlockAlgebraElement(int degree) : BlockAlgebraElement(BlockShape::of(degree)) {}

    static BlockAlgebraElement unit(int degree);

    const BlockShape& shape() const { return *shape_; }
    std::shared_ptr<const BlockShape> shape_ptr() const { return shape_; }
    int degree() const { return shape_->degree(); }

    const std::map<size_t, QMatrix>& stored_blocks() const { return blocks_; }
    /// nullptr when the block is zero.
    const QMatrix* block(size_t b) const;
    /// Dense copy (zero matrix when absent).
    QMatrix block_or_zero(size_t b) const;
    void set_block(size_t b, QMatrix m);
    /// Adds m into block b.
    void add_block(size_t b, const QMatrix& m);

    bool is_zero() const { return blocks_.empty(); }

    BlockAlgebraElement& operator+=(const BlockAlgebraElement& other);
    BlockAlgebraElement& operator-=(const BlockAlgebraElement& other);
    BlockAlgebraElement& operator*=(const Rational& c);

    friend BlockAlgebraElement operator+(BlockAlgebraElement a, const BlockAlgebraElement& b) {
        a += b;
        return a;
    }
    friend BlockAlgebraElement operator-(BlockAlgebraElement a, const BlockAlgebraElement& b) {
        a -= b;
        return a;
    }
    friend BlockAlgebraElement operator*(BlockAlgebraElement a, const Rational& c) {
        a *= c;
        return a;
    }
    friend BlockAlgebraElement operator*(const Rational& c, BlockAlgebraElement a) {
        a *= c;
        return a;
    }
    /// Blockwise matrix product.
    friend BlockAlgebraElement operator*(const BlockAlgebraElement& a, const BlockAlgebraElement& b);

    friend bool operator==(const BlockAlgebraElement& a, const BlockAlgebraElement& b) {
        return a.degree() == b.degree() && a.blocks_ == b.blocks_;
    }

    std::string str() const;

private:
    std::shared_ptr<const BlockShape> shape_;
    std::map<size_t, QMatrix> blocks_;
};

/// E_{row,col} in one block, zero elsewhere.
BlockAlgebraElement matrix_unit(int degree, size_t block, size_t row, size_t col);

/// The diagonal units C_jj, blocks in shape order, j ascending within a
/// block. These are the canonical pairwise-orthogonal minimal idempotents
/// summing to the unit.
std::vector<BlockAlgebraElement> canonical_minimal_idempotents(int degree);

/// Basis of the two-sided slice {b * x * a : x in the block algebra}: per
/// block, (column basis of b) x (row basis of a) rank-one products.
/// Ordered by block, then column-basis index, then row-basis index.
std::vector<BlockAlgebraElement> subspace_basis(const BlockAlgebraElement& b,
                                                const BlockAlgebraElement& a);

}  // namespace symring
