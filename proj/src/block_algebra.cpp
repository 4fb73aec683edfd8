#include "symring/block_algebra.hpp"

#include <sstream>

#include "symring/error.hpp"

namespace symring {

BlockShape::BlockShape(int degree) : degree_(degree) {
    labels_ = enumerate_partitions(degree);
    dims_.reserve(labels_.size());
    for (const Partition& lam : labels_) dims_.push_back(static_cast<size_t>(dimension(lam)));
}

std::shared_ptr<const BlockShape> BlockShape::of(int degree) {
    if (degree < 1) throw Error("block shape: degree must be positive");
    static std::map<int, std::shared_ptr<const BlockShape>> cache;
    auto& slot = cache[degree];
    if (!slot) slot = std::shared_ptr<const BlockShape>(new BlockShape(degree));
    return slot;
}

size_t BlockShape::index_of(const Partition& lambda) const {
    for (size_t b = 0; b < labels_.size(); ++b) {
        if (labels_[b] == lambda) return b;
    }
    throw Error("block shape: no block labeled " + lambda.str());
}

BlockAlgebraElement::BlockAlgebraElement(std::shared_ptr<const BlockShape> shape)
    : shape_(std::move(shape)) {
    if (!shape_) throw Error("block element: null shape");
}

BlockAlgebraElement BlockAlgebraElement::unit(int degree) {
    BlockAlgebraElement u(degree);
    for (size_t b = 0; b < u.shape().block_count(); ++b) {
        u.set_block(b, QMatrix::identity(u.shape().dim(b)));
    }
    return u;
}

const QMatrix* BlockAlgebraElement::block(size_t b) const {
    const auto it = blocks_.find(b);
    return it == blocks_.end() ? nullptr : &it->second;
}

QMatrix BlockAlgebraElement::block_or_zero(size_t b) const {
    if (const QMatrix* m = block(b)) return *m;
    const size_t d = shape_->dim(b);
    return QMatrix(d, d);
}

void BlockAlgebraElement::set_block(size_t b, QMatrix m) {
    if (b >= shape_->block_count()) throw Error("block element: block index out of range");
    const size_t d = shape_->dim(b);
    if (m.rows() != d || m.cols() != d) {
        throw Error("block element: matrix does not fit block " + shape_->label(b).str());
    }
    if (m.is_zero()) {
        blocks_.erase(b);
    } else {
        blocks_.insert_or_assign(b, std::move(m));
    }
}

void BlockAlgebraElement::add_block(size_t b, const QMatrix& m) {
    if (const QMatrix* cur = block(b)) {
        set_block(b, *cur + m);
    } else {
        set_block(b, m);
    }
}

BlockAlgebraElement& BlockAlgebraElement::operator+=(const BlockAlgebraElement& other) {
    if (degree() != other.degree()) throw Error("block element: degree mismatch in +");
    for (const auto& [b, m] : other.blocks_) add_block(b, m);
    return *this;
}

BlockAlgebraElement& BlockAlgebraElement::operator-=(const BlockAlgebraElement& other) {
    if (degree() != other.degree()) throw Error("block element: degree mismatch in -");
    for (const auto& [b, m] : other.blocks_) add_block(b, m * Rational(-1));
    return *this;
}

BlockAlgebraElement& BlockAlgebraElement::operator*=(const Rational& c) {
    if (c == 0) {
        blocks_.clear();
        return *this;
    }
    for (auto& [b, m] : blocks_) m *= c;
    return *this;
}

BlockAlgebraElement operator*(const BlockAlgebraElement& a, const BlockAlgebraElement& b) {
    if (a.degree() != b.degree()) throw Error("block element: degree mismatch in *");
    BlockAlgebraElement out(a.shape_ptr());
    for (const auto& [idx, ma] : a.stored_blocks()) {
        if (const QMatrix* mb = b.block(idx)) out.set_block(idx, ma * *mb);
    }
    return out;
}

std::string BlockAlgebraElement::str() const {
    std::ostringstream out;
    for (size_t b = 0; b < shape_->block_count(); ++b) {
        out << shape_->label(b).str() << ":\n" << block_or_zero(b).str();
    }
    return out.str();
}

BlockAlgebraElement matrix_unit(int degree, size_t block, size_t row, size_t col) {
    BlockAlgebraElement e(degree);
    const size_t d = e.shape().dim(block);
    if (row >= d || col >= d) throw Error("matrix unit: index out of range");
    QMatrix m(d, d);
    m.at(row, col) = 1;
    e.set_block(block, std::move(m));
    return e;
}

std::vector<BlockAlgebraElement> canonical_minimal_idempotents(int degree) {
    std::vector<BlockAlgebraElement> out;
    const auto shape = BlockShape::of(degree);
    for (size_t b = 0; b < shape->block_count(); ++b) {
        for (size_t j = 0; j < shape->dim(b); ++j) out.push_back(matrix_unit(degree, b, j, j));
    }
    return out;
}

std::vector<BlockAlgebraElement> subspace_basis(const BlockAlgebraElement& b,
                                                const BlockAlgebraElement& a) {
    if (b.degree() != a.degree()) throw Error("sandwich basis: degree mismatch");
    std::vector<BlockAlgebraElement> out;
    for (const auto& [idx, mb] : b.stored_blocks()) {
        const QMatrix* ma = a.block(idx);
        if (!ma) continue;
        const QMatrix colb = row_basis(mb.transposed());
        const QMatrix rowa = row_basis(*ma);
        for (size_t i = 0; i < colb.rows(); ++i) {
            for (size_t j = 0; j < rowa.rows(); ++j) {
                QMatrix m(mb.rows(), mb.rows());
                for (size_t x = 0; x < mb.rows(); ++x) {
                    if (colb.at(i, x) == 0) continue;
                    for (size_t y = 0; y < mb.rows(); ++y) {
                        m.at(x, y) = colb.at(i, x) * rowa.at(j, y);
                    }
                }
                BlockAlgebraElement e(b.shape_ptr());
                e.set_block(idx, std::move(m));
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

}  // namespace symring
