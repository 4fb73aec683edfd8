#include "symring/ideal_decomp.hpp"

#include <algorithm>

#include "symring/error.hpp"

namespace symring {

namespace {

/// The unique stored block of a primitive idempotent.
std::pair<size_t, const QMatrix*> single_block(const BlockAlgebraElement& e) {
    if (e.stored_blocks().size() != 1) {
        throw Error("resolvent: idempotent must live in exactly one block");
    }
    const auto& [b, m] = *e.stored_blocks().begin();
    return {b, &m};
}

/// Writes a rank-one idempotent as E = w * h (column times row). The
/// idempotent property forces h * w = 1. Throws when E is not rank one.
void rank_one_split(const QMatrix& e, QMatrix& w, QMatrix& h) {
    size_t i0 = e.rows(), j0 = e.cols();
    for (size_t i = 0; i < e.rows() && i0 == e.rows(); ++i) {
        for (size_t j = 0; j < e.cols(); ++j) {
            if (e.at(i, j) != 0) {
                i0 = i;
                j0 = j;
                break;
            }
        }
    }
    if (i0 == e.rows()) throw Error("resolvent: idempotent is zero");
    h = QMatrix(1, e.cols());
    for (size_t j = 0; j < e.cols(); ++j) h.at(0, j) = e.at(i0, j);
    w = QMatrix(e.rows(), 1);
    for (size_t i = 0; i < e.rows(); ++i) w.at(i, 0) = e.at(i, j0) / h.at(0, j0);
    for (size_t i = 0; i < e.rows(); ++i) {
        for (size_t j = 0; j < e.cols(); ++j) {
            if (e.at(i, j) != w.at(i, 0) * h.at(0, j)) {
                throw Error("resolvent: idempotent is not rank one");
            }
        }
    }
}

size_t first_nonzero(const QMatrix& v) {
    for (size_t k = 0; k < v.rows() * v.cols(); ++k) {
        if (v.at(k / v.cols(), k % v.cols()) != 0) return k;
    }
    throw Error("resolvent: product vanishes, no solution");
}

bool same_row_span(const QMatrix& a, const QMatrix& b) {
    QMatrix stacked(a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
    }
    for (size_t i = 0; i < b.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
    }
    const size_t r = rank(stacked);
    return r == rank(a) && r == rank(b);
}

/// Ideal slices are row spans for left ideals, column spans for right.
bool same_span(const QMatrix& a, const QMatrix& b, Side side) {
    return side == Side::Left ? same_row_span(a, b)
                              : same_row_span(a.transposed(), b.transposed());
}

bool same_span(const BlockAlgebraElement& a, const BlockAlgebraElement& b, Side side) {
    for (size_t bi = 0; bi < a.shape().block_count(); ++bi) {
        if (!a.block(bi) && !b.block(bi)) continue;
        if (!same_span(a.block_or_zero(bi), b.block_or_zero(bi), side)) return false;
    }
    return true;
}

}  // namespace

BlockAlgebraElement resolve_idempotent(const BlockAlgebraElement& e, const BlockAlgebraElement& b,
                                       Side side) {
    if (e.degree() != b.degree()) throw Error("resolvent: degree mismatch");
    const auto [bi, em] = single_block(e);
    QMatrix w, h;
    rank_one_split(*em, w, h);
    const QMatrix bm = b.block_or_zero(bi);
    const size_t d = em->rows();
    QMatrix x(d, d);
    if (side == Side::Left) {
        const QMatrix m = h * bm;
        const size_t k0 = first_nonzero(m);
        const size_t j0 = first_nonzero(w);
        x.at(k0, j0) = Rational(1) / (m.at(0, k0) * w.at(j0, 0));
    } else {
        const QMatrix m = bm * w;
        const size_t k0 = first_nonzero(m);
        const size_t j0 = first_nonzero(h);
        x.at(j0, k0) = Rational(1) / (h.at(0, j0) * m.at(k0, 0));
    }
    BlockAlgebraElement out(e.shape_ptr());
    out.set_block(bi, std::move(x));
    const BlockAlgebraElement check =
        side == Side::Left ? e * b * out * e : e * out * b * e;
    if (check != e) throw Error("resolvent: verification failed");
    return out;
}

BlockAlgebraElement idempotent_from_product(const BlockAlgebraElement& e,
                                            const BlockAlgebraElement& a, Side side) {
    const BlockAlgebraElement x = resolve_idempotent(e, a, side);
    const BlockAlgebraElement ep = side == Side::Left ? x * e * a : a * e * x;
    if (ep * ep != ep) throw Error("idempotent_from_product: result is not idempotent");
    const BlockAlgebraElement seed = side == Side::Left ? e * a : a * e;
    if (!same_span(ep, seed, side)) {
        throw Error("idempotent_from_product: ideal changed");
    }
    return ep;
}

OrthogonalizedPair orthogonalize(const BlockAlgebraElement& e, const BlockAlgebraElement& etilde,
                                 Side side) {
    const BlockAlgebraElement contained = side == Side::Left ? e * etilde : etilde * e;
    if (contained == e) throw Error("orthogonalize: ideal of e already contained");
    const auto [bi, em] = single_block(e);
    const size_t d = em->rows();

    // 1 - etilde, restricted to e's block: every product below keeps only
    // that block of the complement.
    BlockAlgebraElement comp(e.shape_ptr());
    comp.set_block(bi, QMatrix::identity(d) - etilde.block_or_zero(bi));

    OrthogonalizedPair out{BlockAlgebraElement(e.shape_ptr()), BlockAlgebraElement(e.shape_ptr()),
                           BlockAlgebraElement(e.shape_ptr())};
    if (side == Side::Left) {
        const BlockAlgebraElement x = resolve_idempotent(e, comp, Side::Left);
        out.f = comp * x * e;
        const BlockAlgebraElement xt = resolve_idempotent(out.f, comp, Side::Left);
        out.z = comp * xt * out.f;
        out.ftilde = etilde - out.z * etilde;
    } else {
        const BlockAlgebraElement x = resolve_idempotent(e, comp, Side::Right);
        out.f = e * x * comp;
        const BlockAlgebraElement xt = resolve_idempotent(out.f, comp, Side::Right);
        out.z = out.f * xt * comp;
        out.ftilde = etilde - etilde * out.z;
    }

    if (out.f * out.f != out.f) throw Error("orthogonalize: f not idempotent");
    if (out.ftilde * out.ftilde != out.ftilde) throw Error("orthogonalize: ftilde not idempotent");
    if (!(out.f * out.ftilde).is_zero() || !(out.ftilde * out.f).is_zero()) {
        throw Error("orthogonalize: products not zero");
    }
    if (!same_span(out.f, e, side)) throw Error("orthogonalize: ideal of e changed");
    if (!same_span(out.ftilde, etilde, side)) throw Error("orthogonalize: ideal of etilde changed");
    return out;
}

std::map<Partition, long long> DecompositionResult::label_multiset() const {
    std::map<Partition, long long> out;
    for (const Partition& lam : labels) ++out[lam];
    return out;
}

long long DecompositionResult::ideal_dimension() const {
    long long d = 0;
    for (const Partition& lam : labels) d += dimension(lam);
    return d;
}

MultiplicityBounds ideal_multiplicities(const std::vector<BlockAlgebraElement>& generators,
                                        Side side) {
    if (generators.empty()) throw Error("ideal_multiplicities: no generators");
    const BlockShape& shape = generators[0].shape();
    MultiplicityBounds out;
    for (size_t b = 0; b < shape.block_count(); ++b) {
        const size_t d = shape.dim(b);
        std::vector<QMatrix> present;
        for (const auto& g : generators) {
            if (const QMatrix* m = g.block(b)) {
                present.push_back(side == Side::Left ? *m : m->transposed());
            }
        }
        if (present.empty()) continue;
        QMatrix stacked(present.size() * d, d);
        for (size_t k = 0; k < present.size(); ++k) {
            for (size_t i = 0; i < d; ++i) {
                for (size_t j = 0; j < d; ++j) stacked.at(k * d + i, j) = present[k].at(i, j);
            }
        }
        const size_t r = rank(stacked);
        if (r > 0) out[shape.label(b)] = static_cast<long long>(r);
    }
    return out;
}

MultiplicityBounds ideal_multiplicities(const BlockAlgebraElement& e) {
    return ideal_multiplicities(std::vector<BlockAlgebraElement>{e}, Side::Left);
}

namespace {

void verify_result(const DecompositionResult& res,
                   const std::vector<BlockAlgebraElement>& generators, Side side) {
    BlockAlgebraElement sum(res.total.shape_ptr());
    for (const auto& h : res.block_idempotents) {
        if (h * h != h) throw Error("decompose: summand not idempotent");
        const auto [bi, m] = single_block(h);
        if (rank(*m) != 1) throw Error("decompose: summand not primitive");
        sum += h;
    }
    if (sum != res.total) throw Error("decompose: idempotents do not sum to the total");
    if (res.total * res.total != res.total) throw Error("decompose: total not idempotent");
    for (size_t i = 0; i < res.block_idempotents.size(); ++i) {
        for (size_t j = 0; j < res.block_idempotents.size(); ++j) {
            if (i == j) continue;
            if (!(res.block_idempotents[i] * res.block_idempotents[j]).is_zero()) {
                throw Error("decompose: summands not orthogonal");
            }
        }
    }
    // No ideal lost, none duplicated: dimensions must match the generators.
    long long expect = 0;
    for (const auto& [lam, mult] : ideal_multiplicities(generators, side)) {
        expect += dimension(lam) * mult;
    }
    if (res.ideal_dimension() != expect) {
        throw Error("decompose: decomposed dimension disagrees with generator rank");
    }
}

}  // namespace

DecompositionResult decompose(const std::vector<BlockAlgebraElement>& generators, Side side,
                              const std::optional<MultiplicityBounds>& bounds) {
    if (generators.empty()) throw Error("decompose: no generators");
    const auto shape = generators[0].shape_ptr();
    bool any = false;
    for (const auto& g : generators) {
        if (g.degree() != shape->degree()) throw Error("decompose: degree mismatch");
        any = any || !g.is_zero();
    }
    if (!any) throw Error("decompose: all generators are zero");

    std::vector<long long> remaining;
    if (bounds) {
        remaining.assign(shape->block_count(), 0);
        for (const auto& [lam, m] : *bounds) remaining[shape->index_of(lam)] = m;
    }

    DecompositionResult res{.block_idempotents = {},
                            .ring_idempotents = {},
                            .labels = {},
                            .seeds = {},
                            .total = BlockAlgebraElement(shape),
                            .total_ring = std::nullopt,
                            .seed_inspections = 0};

    for (size_t b = 0; b < shape->block_count(); ++b) {
        if (bounds && remaining[b] <= 0) continue;
        const size_t d = shape->dim(b);
        bool block_done = false;
        for (size_t j = 0; j < d && !block_done; ++j) {
            for (size_t gi = 0; gi < generators.size(); ++gi) {
                if (bounds && remaining[b] <= 0) {
                    block_done = true;
                    break;
                }
                ++res.seed_inspections;
                const QMatrix* am = generators[gi].block(b);
                if (!am) continue;
                // Seed C_jj * a (left) keeps row j of the block; a * C_jj
                // (right) keeps column j.
                QMatrix sm(d, d);
                bool nonzero = false;
                for (size_t k = 0; k < d; ++k) {
                    const Rational& v = side == Side::Left ? am->at(j, k) : am->at(k, j);
                    if (v == 0) continue;
                    nonzero = true;
                    if (side == Side::Left) {
                        sm.at(j, k) = v;
                    } else {
                        sm.at(k, j) = v;
                    }
                }
                if (!nonzero) continue;
                BlockAlgebraElement seed(shape);
                seed.set_block(b, std::move(sm));
                const BlockAlgebraElement reach =
                    side == Side::Left ? seed * res.total : res.total * seed;
                if (reach == seed) continue;  // already inside the accumulated ideal

                const BlockAlgebraElement e1 =
                    idempotent_from_product(matrix_unit(shape->degree(), b, j, j),
                                            generators[gi], side);
                OrthogonalizedPair pair = orthogonalize(e1, res.total, side);
                for (auto& h : res.block_idempotents) {
                    h = side == Side::Left ? h - pair.z * h : h - h * pair.z;
                }
                res.total = pair.ftilde + pair.f;
                res.block_idempotents.push_back(std::move(pair.f));
                res.labels.push_back(shape->label(b));
                res.seeds.push_back({b, j, gi});
                if (bounds) --remaining[b];
            }
        }
    }

    verify_result(res, generators, side);
    return res;
}

DecompositionResult decompose(const std::vector<GroupRingElement>& generators, Side side,
                              const NaturalRepCache& cache,
                              const std::optional<MultiplicityBounds>& bounds) {
    std::vector<BlockAlgebraElement> bg;
    bg.reserve(generators.size());
    for (const auto& g : generators) bg.push_back(fourier(g, cache));
    DecompositionResult res = decompose(bg, side, bounds);
    for (const auto& h : res.block_idempotents) {
        res.ring_idempotents.push_back(inverse_fourier(h, cache));
    }
    res.total_ring = inverse_fourier(res.total, cache);
    return res;
}

BlockAlgebraElement sum_ideal_idempotent(const std::vector<BlockAlgebraElement>& generators,
                                         Side side) {
    if (generators.empty()) throw Error("sum ideal: no generators");
    bool any = false;
    for (const auto& g : generators) {
        if (g.degree() != generators[0].degree()) throw Error("sum ideal: degree mismatch");
        any = any || !g.is_zero();
    }
    // The sum of zero ideals is the zero ideal, generated by zero.
    if (!any) return BlockAlgebraElement(generators[0].shape_ptr());
    return decompose(generators, side).total;
}

BlockAlgebraElement intersection_idempotent(const std::vector<BlockAlgebraElement>& idempotents,
                                            Side side) {
    if (idempotents.empty()) throw Error("intersection: no ideals given");
    const auto shape = idempotents[0].shape_ptr();
    const BlockAlgebraElement one = BlockAlgebraElement::unit(shape->degree());
    std::vector<BlockAlgebraElement> complements;
    for (const auto& e : idempotents) {
        if (e * e != e) throw Error("intersection: input is not idempotent");
        BlockAlgebraElement c = one - e;
        if (!c.is_zero()) complements.push_back(std::move(c));
    }
    BlockAlgebraElement out = one;
    if (!complements.empty()) {
        // The annihilator of the intersection lives on the opposite side.
        const Side opposite = side == Side::Left ? Side::Right : Side::Left;
        out -= decompose(complements, opposite).total;
    }
    if (out * out != out) throw Error("intersection: result not idempotent");
    for (const auto& e : idempotents) {
        const BlockAlgebraElement member = side == Side::Left ? out * e : e * out;
        if (member != out) throw Error("intersection: result escapes an input ideal");
    }
    return out;
}

}  // namespace symring
