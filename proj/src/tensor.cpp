#include "symring/tensor.hpp"

#include <algorithm>
#include <utility>

#include "symring/error.hpp"

namespace symring {

namespace {

long long int_pow(int base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Runs body over all tuples in {0..dim-1}^len, reusing one buffer.
void for_each_index(int len, int dim, const std::function<void(const std::vector<int>&)>& body) {
    std::vector<int> idx(static_cast<size_t>(len), 0);
    while (true) {
        body(idx);
        int k = len - 1;
        while (k >= 0 && idx[static_cast<size_t>(k)] == dim - 1) {
            idx[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) return;
        ++idx[static_cast<size_t>(k)];
    }
}

QMatrix column_basis(const QMatrix& m) { return row_basis(m.transposed()).transposed(); }

QMatrix hstack(const std::vector<QMatrix>& mats) {
    size_t cols = 0;
    for (const QMatrix& m : mats) cols += m.cols();
    QMatrix out(mats.front().rows(), cols);
    size_t base = 0;
    for (const QMatrix& m : mats) {
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) out.at(i, base + j) = m.at(i, j);
        base += m.cols();
    }
    return out;
}

bool same_column_span(const QMatrix& a, const QMatrix& b) {
    const size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(hstack({a, b})) == ra;
}

/// Value blocks {start+1..start+part} of the rows of the first standard
/// tableau of lambda; length-1 rows are dropped (they fix everything).
std::vector<std::vector<int>> row_value_blocks(const Partition& lambda) {
    std::vector<std::vector<int>> blocks;
    int start = 0;
    for (int part : lambda.parts()) {
        if (part >= 2) {
            std::vector<int> block(static_cast<size_t>(part));
            for (int i = 0; i < part; ++i) block[static_cast<size_t>(i)] = start + 1 + i;
            blocks.push_back(std::move(block));
        }
        start += part;
    }
    return blocks;
}

std::vector<size_t> stored_block_indices(const BlockAlgebraElement& e) {
    std::vector<size_t> out;
    out.reserve(e.stored_blocks().size());
    for (const auto& [b, m] : e.stored_blocks()) out.push_back(b);
    return out;
}

void require_idempotent(const BlockAlgebraElement& e, const char* where) {
    if (!(e * e == e)) throw Error(std::string(where) + ": element is not idempotent");
}

/// Factors W_block = (column span of all listed left blocks) x (row span
/// of eblock), inserted only when both factors are nonzero. The right
/// factor is checked to be e-stable, which is what makes every basis
/// element a member of algebra * e.
void insert_factored_block(FactoredSubspace& w, size_t block,
                           const std::vector<QMatrix>& left_parts, const QMatrix& eblock,
                           const char* where) {
    QMatrix u = column_basis(hstack(left_parts));
    if (u.cols() == 0) return;
    QMatrix r = row_basis(eblock);
    if (r.rows() == 0) return;
    if (!(r * eblock == r)) throw Error(std::string(where) + ": right factor escapes the ideal");
    w.factors.emplace(block, std::make_pair(std::move(u), std::move(r)));
}

}  // namespace

TensorDense::TensorDense(int order, int dim) : order_(order), dim_(dim) {
    if (order < 0) throw Error("tensor: negative order");
    if (dim < 1) throw Error("tensor: dimension must be positive");
    coords_.assign(static_cast<size_t>(int_pow(dim, order)), Rational(0));
}

size_t TensorDense::offset(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != order_) throw Error("tensor: index arity mismatch");
    size_t off = 0;
    for (int v : idx) {
        if (v < 0 || v >= dim_) throw Error("tensor: index out of range");
        off = off * static_cast<size_t>(dim_) + static_cast<size_t>(v);
    }
    return off;
}

bool TensorDense::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

TensorDense& TensorDense::operator+=(const TensorDense& other) {
    if (order_ != other.order_ || dim_ != other.dim_) throw Error("tensor: shape mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

TensorDense& TensorDense::operator-=(const TensorDense& other) {
    if (order_ != other.order_ || dim_ != other.dim_) throw Error("tensor: shape mismatch");
    for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

TensorDense& TensorDense::operator*=(const Rational& c) {
    for (Rational& v : coords_) v *= c;
    return *this;
}

MetricSignature::MetricSignature(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("signature: empty");
    for (int e : entries_)
        if (e != 1 && e != -1) throw Error("signature: entries must be +1 or -1");
}

MetricSignature MetricSignature::euclidean(int dim) {
    return MetricSignature(std::vector<int>(static_cast<size_t>(dim), 1));
}

void ContractionSpec::validate(int dim) const {
    if (l < 1 || 2 * l > r) throw Error("contraction: need 2 <= 2l <= r");
    if (static_cast<int>(b0.size()) != r - 2 * l)
        throw Error("contraction: b0 must list r-2l basis indices");
    for (int v : b0)
        if (v < 0 || v >= dim) throw Error("contraction: b0 index out of range");
}

GroupRingElement t_b(const TensorDense& T, const std::vector<int>& b, int guard) {
    const int r = T.order();
    if (static_cast<int>(b.size()) != r) throw Error("t_b: tuple length must equal the order");
    for (int v : b)
        if (v < 0 || v >= T.dim()) throw Error("t_b: basis index out of range");
    GroupRingElement out(r);
    std::vector<int> idx(static_cast<size_t>(r));
    for (const Permutation& p : enumerate_sym_group(r, guard)) {
        for (int k = 1; k <= r; ++k) idx[static_cast<size_t>(k - 1)] = b[static_cast<size_t>(p(k) - 1)];
        const Rational& c = T.at(idx);
        if (c != 0) out.add_term(p, c);
    }
    return out;
}

TensorDense apply_operator(const GroupRingElement& a, const TensorDense& T) {
    const int r = T.order();
    if (a.degree() != r) throw Error("apply_operator: degree mismatch");
    TensorDense out(r, T.dim());
    std::vector<int> permuted(static_cast<size_t>(r));
    size_t off = 0;
    for_each_index(r, T.dim(), [&](const std::vector<int>& idx) {
        Rational total = 0;
        for (const auto& [p, c] : a.terms()) {
            for (int k = 1; k <= r; ++k)
                permuted[static_cast<size_t>(k - 1)] = idx[static_cast<size_t>(p(k) - 1)];
            total += c * T.at(permuted);
        }
        out.coordinates()[off++] = std::move(total);
    });
    return out;
}

bool membership(const GroupRingElement& e, const TensorDense& T) {
    return apply_operator(e, T) == T;
}

SymmetryIdeal symmetry_ideal_from_identities(const std::vector<GroupRingElement>& generators,
                                             const NaturalRepCache& cache) {
    if (generators.empty()) throw Error("symmetry ideal: no generators");
    const int r = cache.degree();
    std::vector<BlockAlgebraElement> starred;
    starred.reserve(generators.size());
    for (const GroupRingElement& a : generators) {
        if (a.degree() != r) throw Error("symmetry ideal: generator degree mismatch");
        starred.push_back(fourier(star(a), cache));
    }
    // The annihilated tensors have every T_b killed on the right by each
    // star(a_i); that left ideal is the complement of the right ideal the
    // starred generators span.
    const BlockAlgebraElement span = sum_ideal_idempotent(starred, Side::Right);
    BlockAlgebraElement e_blocks = BlockAlgebraElement::unit(r) - span;
    require_idempotent(e_blocks, "symmetry ideal");
    for (const BlockAlgebraElement& s : starred) {
        if (!(e_blocks * s).is_zero()) throw Error("symmetry ideal: annihilator check failed");
    }
    if (e_blocks.is_zero()) {
        return SymmetryIdeal{GroupRingElement::zero(r), std::move(e_blocks),
                             DecompositionResult{{}, {}, {}, {}, BlockAlgebraElement(r),
                                                 GroupRingElement::zero(r), 0},
                             true};
    }
    DecompositionResult components = decompose({e_blocks}, Side::Left);
    components.ring_idempotents.reserve(components.block_idempotents.size());
    for (const BlockAlgebraElement& h : components.block_idempotents)
        components.ring_idempotents.push_back(inverse_fourier(h, cache));
    components.total_ring = inverse_fourier(components.total, cache);
    GroupRingElement e_ring = inverse_fourier(e_blocks, cache);
    return SymmetryIdeal{std::move(e_ring), std::move(e_blocks), std::move(components), false};
}

Permutation embed_permutation(const Permutation& s, int degree, int offset) {
    const int m = s.degree();
    if (offset < 0 || offset + m > degree) throw Error("embed: window out of range");
    std::vector<int> img(static_cast<size_t>(degree));
    for (int k = 1; k <= degree; ++k) img[static_cast<size_t>(k - 1)] = k;
    for (int k = 1; k <= m; ++k) img[static_cast<size_t>(offset + k - 1)] = offset + s(k);
    return Permutation(std::move(img));
}

GroupRingElement embed_element(const GroupRingElement& a, int degree, int offset) {
    GroupRingElement out(degree);
    for (const auto& [p, c] : a.terms()) out.add_term(embed_permutation(p, degree, offset), c);
    return out;
}

std::vector<Permutation> block_copy_group(int m, int n, int guard) {
    if (m < 1 || n < 1) throw Error("block copy group: need positive window and count");
    if (m * n > guard) throw GuardError("block copy group: degree exceeds the guard");
    std::vector<Permutation> out;
    for (const Permutation& s : enumerate_sym_group(n, guard)) {
        std::vector<int> img(static_cast<size_t>(m * n));
        for (int k = 1; k <= n; ++k)
            for (int j = 0; j <= m - 1; ++j)
                img[static_cast<size_t>(k * m - j - 1)] = s(k) * m - j;
        out.emplace_back(std::move(img));
    }
    return out;
}

SchurExpansion product_ideal_constituents(const std::vector<SchurExpansion>& factors) {
    if (factors.empty()) throw Error("product ideal: no factors");
    SchurExpansion acc = factors.front();
    for (size_t i = 1; i < factors.size(); ++i) acc = lr_product(acc, factors[i]);
    return acc;
}

SchurExpansion power_ideal_constituents(const SchurExpansion& base, int n) {
    return plethysm_sym_power(base, n);
}

long long constituents_dimension(const SchurExpansion& m) {
    long long total = 0;
    for (const auto& [lambda, mult] : m) total += dimension(lambda) * mult;
    return total;
}

namespace {

/// Shared tail of the composite-ideal builders: decompose the left ideal
/// of the ring-domain idempotent and require the constituents to match the
/// character-level prediction.
CompositeIdeal finish_composite(GroupRingElement gen, const SchurExpansion& expected,
                                const NaturalRepCache& cache, const char* where) {
    if (!(gen * gen == gen)) throw Error(std::string(where) + ": generator is not idempotent");
    DecompositionResult dec = decompose({fourier(gen, cache)}, Side::Left);
    if (dec.label_multiset() != expected)
        throw Error(std::string(where) + ": constituents disagree with the character prediction");
    dec.ring_idempotents.reserve(dec.block_idempotents.size());
    for (const BlockAlgebraElement& h : dec.block_idempotents)
        dec.ring_idempotents.push_back(inverse_fourier(h, cache));
    dec.total_ring = inverse_fourier(dec.total, cache);
    GroupRingElement total_ring = *dec.total_ring;
    BlockAlgebraElement total_blocks = dec.total;
    return CompositeIdeal{std::move(total_ring), std::move(total_blocks), std::move(dec), expected};
}

SchurExpansion factor_constituents(const GroupRingElement& e) {
    NaturalRepCache cache(e.degree());
    MultiplicityBounds mult = ideal_multiplicities(fourier(e, cache));
    return SchurExpansion(mult.begin(), mult.end());
}

}  // namespace

CompositeIdeal product_ideal(const std::vector<std::pair<int, GroupRingElement>>& factors,
                             const NaturalRepCache& cache) {
    if (factors.empty()) throw Error("product ideal: no factors");
    int total_degree = 0;
    for (const auto& [ri, ei] : factors) total_degree += ri;
    if (total_degree != cache.degree()) throw Error("product ideal: cache degree mismatch");
    GroupRingElement gen = GroupRingElement::one(total_degree);
    std::vector<SchurExpansion> factor_mults;
    int offset = 0;
    for (const auto& [ri, ei] : factors) {
        if (ei.degree() != ri) throw Error("product ideal: factor degree mismatch");
        if (!(ei * ei == ei)) throw Error("product ideal: factor is not idempotent");
        if (ei.is_zero()) throw Error("product ideal: zero factor");
        gen = gen * embed_element(ei, total_degree, offset);
        factor_mults.push_back(factor_constituents(ei));
        offset += ri;
    }
    return finish_composite(std::move(gen), product_ideal_constituents(factor_mults), cache,
                            "product ideal");
}

CompositeIdeal power_ideal(const GroupRingElement& e0, int n, const NaturalRepCache& cache) {
    if (n < 1) throw Error("power ideal: need n >= 1");
    if (!(e0 * e0 == e0)) throw Error("power ideal: base is not idempotent");
    if (e0.is_zero()) throw Error("power ideal: zero base");
    const int m = e0.degree();
    const int r = m * n;
    if (r != cache.degree()) throw Error("power ideal: cache degree mismatch");
    GroupRingElement gen = GroupRingElement::one(r);
    for (int i = 0; i < n; ++i) gen = gen * embed_element(e0, r, i * m);
    const std::vector<Permutation> q = block_copy_group(m, n, r);
    GroupRingElement q_avg = group_sum(r, q) * (Rational(1) / to_rational(static_cast<long long>(q.size())));
    // The window shuffles permute the embedded copies among themselves, so
    // the two factors commute and their product stays idempotent.
    if (!(gen * q_avg == q_avg * gen)) throw Error("power ideal: window group does not commute");
    return finish_composite(gen * q_avg, power_ideal_constituents(factor_constituents(e0), n),
                            cache, "power ideal");
}

void for_each_paired_tuple(const ContractionSpec& spec, const MetricSignature& g,
                           const std::function<void(const std::vector<int>&, int)>& visit) {
    spec.validate(g.dim());
    std::vector<int> b(static_cast<size_t>(spec.r));
    std::copy(spec.b0.begin(), spec.b0.end(), b.begin() + 2 * spec.l);
    for_each_index(spec.l, g.dim(), [&](const std::vector<int>& w) {
        int gamma = 1;
        for (int i = 0; i < spec.l; ++i) {
            b[static_cast<size_t>(2 * i)] = w[static_cast<size_t>(i)];
            b[static_cast<size_t>(2 * i + 1)] = w[static_cast<size_t>(i)];
            gamma *= g.value(w[static_cast<size_t>(i)]);
        }
        visit(b, gamma);
    });
}

GroupRingElement contraction_sum(const TensorDense& T, const MetricSignature& g,
                                 const ContractionSpec& spec) {
    if (T.order() != spec.r) throw Error("contraction sum: tensor order mismatch");
    if (T.dim() != g.dim()) throw Error("contraction sum: tensor/signature dimension mismatch");
    GroupRingElement via_tuples(spec.r);
    for_each_paired_tuple(spec, g, [&](const std::vector<int>& b, int gamma) {
        via_tuples += t_b(T, b) * Rational(gamma);
    });
    // Independent route: the l-fold metric trace of each permuted tensor,
    // taken per permutation.
    GroupRingElement direct(spec.r);
    std::vector<int> c(static_cast<size_t>(spec.r));
    std::vector<int> permuted(static_cast<size_t>(spec.r));
    std::copy(spec.b0.begin(), spec.b0.end(), c.begin() + 2 * spec.l);
    for (const Permutation& p : enumerate_sym_group(spec.r)) {
        Rational total = 0;
        for_each_index(spec.l, g.dim(), [&](const std::vector<int>& w) {
            int gamma = 1;
            for (int i = 0; i < spec.l; ++i) {
                c[static_cast<size_t>(2 * i)] = w[static_cast<size_t>(i)];
                c[static_cast<size_t>(2 * i + 1)] = w[static_cast<size_t>(i)];
                gamma *= g.value(w[static_cast<size_t>(i)]);
            }
            for (int k = 1; k <= spec.r; ++k)
                permuted[static_cast<size_t>(k - 1)] = c[static_cast<size_t>(p(k) - 1)];
            total += Rational(gamma) * T.at(permuted);
        });
        if (total != 0) direct.add_term(p, total);
    }
    if (!(via_tuples == direct)) throw Error("contraction sum: the two evaluation routes disagree");
    return via_tuples;
}

long long FactoredSubspace::dimension() const {
    long long total = 0;
    for (const auto& [b, ur] : factors)
        total += static_cast<long long>(ur.first.cols()) * static_cast<long long>(ur.second.rows());
    return total;
}

std::vector<BlockAlgebraElement> FactoredSubspace::block_basis() const {
    std::vector<BlockAlgebraElement> out;
    for (const auto& [b, ur] : factors) {
        const QMatrix& u = ur.first;
        const QMatrix& r = ur.second;
        for (size_t i = 0; i < u.cols(); ++i) {
            for (size_t j = 0; j < r.rows(); ++j) {
                QMatrix m(u.rows(), r.cols());
                for (size_t a = 0; a < u.rows(); ++a)
                    for (size_t c = 0; c < r.cols(); ++c) m.at(a, c) = u.at(a, i) * r.at(j, c);
                BlockAlgebraElement elem(shape);
                elem.set_block(b, std::move(m));
                out.push_back(std::move(elem));
            }
        }
    }
    return out;
}

bool same_subspace(const FactoredSubspace& a, const FactoredSubspace& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (const auto& [block, ur] : a.factors) {
        auto it = b.factors.find(block);
        if (it == b.factors.end()) return false;
        if (!same_column_span(ur.first, it->second.first)) return false;
        if (!same_column_span(ur.second.transposed(), it->second.second.transposed())) return false;
    }
    return true;
}

FactoredSubspace contraction_space_universal(const BlockAlgebraElement& e_blocks, int l,
                                             const NaturalRepCache& cache) {
    const int r = cache.degree();
    if (l < 1 || 2 * l > r) throw Error("contraction space: need 2 <= 2l <= r");
    if (e_blocks.degree() != r) throw Error("contraction space: degree mismatch");
    require_idempotent(e_blocks, "contraction space");
    FactoredSubspace w{cache.shape_ptr(), {}};
    if (e_blocks.is_zero()) return w;
    const std::vector<size_t> only = stored_block_indices(e_blocks);
    std::vector<int> shape_parts(static_cast<size_t>(l), 2);
    shape_parts.resize(static_cast<size_t>(l + r - 2 * l), 1);
    const StandardTableau t = row_filled_tableau(Partition(std::move(shape_parts)));
    BlockAlgebraElement hsum =
        young_subgroup_sum_fourier(cache, row_value_blocks(t.shape()), only);
    BlockAlgebraElement qsum = fourier(group_sum(r, row_block_permuters(t, 2)), cache, only);
    const BlockAlgebraElement gsum = hsum * qsum;
    for (const auto& [block, eblock] : e_blocks.stored_blocks()) {
        const QMatrix* gblock = gsum.block(block);
        if (gblock == nullptr) continue;
        insert_factored_block(w, block, {*gblock}, eblock, "contraction space");
    }
    return w;
}

FactoredSubspace contraction_space_dim_limited(const BlockAlgebraElement& e_blocks,
                                               const ContractionSpec& spec,
                                               const MetricSignature& g,
                                               const NaturalRepCache& cache) {
    if (spec.r != cache.degree()) throw Error("contraction space: degree mismatch");
    if (e_blocks.degree() != spec.r) throw Error("contraction space: degree mismatch");
    require_idempotent(e_blocks, "contraction space");
    FactoredSubspace w{cache.shape_ptr(), {}};
    if (e_blocks.is_zero()) return w;
    const std::vector<size_t> only = stored_block_indices(e_blocks);

    // a_<lambda;w> = sum of gamma_b inverse(carrier(b)) over the paired
    // tuples sharing one smallest grouping.
    std::map<std::pair<Partition, std::vector<int>>, GroupRingElement> summands;
    for_each_paired_tuple(spec, g, [&](const std::vector<int>& b, int gamma) {
        Grouping gr = grouping(b);
        auto key = std::make_pair(gr.lambda, grouping_tuple(gr));
        auto [it, inserted] = summands.try_emplace(std::move(key), spec.r);
        it->second.add_term(inverse(gr.carrier), Rational(gamma));
    });

    std::map<Partition, BlockAlgebraElement> row_group_sums;
    std::map<size_t, std::vector<QMatrix>> left_parts;
    for (const auto& [key, a] : summands) {
        const Partition& lambda = key.first;
        auto hit = row_group_sums.find(lambda);
        if (hit == row_group_sums.end()) {
            hit = row_group_sums
                      .emplace(lambda,
                               young_subgroup_sum_fourier(cache, row_value_blocks(lambda), only))
                      .first;
        }
        const BlockAlgebraElement left = fourier(a, cache, only) * hit->second;
        for (const auto& [block, m] : left.stored_blocks()) left_parts[block].push_back(m);
    }
    for (const auto& [block, parts] : left_parts) {
        const QMatrix* eblock = e_blocks.block(block);
        if (eblock == nullptr) continue;
        insert_factored_block(w, block, parts, *eblock, "contraction space");
    }
    return w;
}

std::vector<GroupRingElement> contraction_space(const GroupRingElement& e,
                                                const ContractionSpec& spec, ContractionMode mode,
                                                const std::optional<MetricSignature>& g,
                                                const NaturalRepCache& cache) {
    const BlockAlgebraElement e_blocks = fourier(e, cache);
    FactoredSubspace w{cache.shape_ptr(), {}};
    if (mode == ContractionMode::Universal) {
        w = contraction_space_universal(e_blocks, spec.l, cache);
    } else {
        if (!g) throw Error("contraction space: the dimension-limited mode needs a signature");
        w = contraction_space_dim_limited(e_blocks, spec, *g, cache);
    }
    std::vector<GroupRingElement> out;
    for (const BlockAlgebraElement& h : w.block_basis()) out.push_back(inverse_fourier(h, cache));
    return out;
}

Grouping grouping(const std::vector<int>& b) {
    if (b.empty()) throw Error("grouping: empty tuple");
    std::map<int, int> counts;
    for (int v : b) {
        if (v < 0) throw Error("grouping: negative basis index");
        ++counts[v];
    }
    // Multiplicities descending; among equal multiplicities the smaller
    // basis index comes first, which is the smallest grouping.
    std::vector<std::pair<int, int>> order;  // (value, count)
    order.reserve(counts.size());
    for (const auto& [v, c] : counts) order.emplace_back(v, c);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& bb) { return a.second > bb.second; });
    std::vector<int> parts, values;
    for (const auto& [v, c] : order) {
        parts.push_back(c);
        values.push_back(v);
    }
    Grouping gr{Partition(std::move(parts)), std::move(values), Permutation::identity(1)};
    const std::vector<int> tuple = grouping_tuple(gr);
    // carrier(k) = leftmost unused tuple slot holding b[k]; greedy gives
    // the lexicographically least image list.
    std::vector<int> img(b.size());
    std::vector<bool> used(b.size(), false);
    for (size_t k = 0; k < b.size(); ++k) {
        size_t pos = 0;
        while (pos < b.size() && (used[pos] || tuple[pos] != b[k])) ++pos;
        if (pos == b.size()) throw Error("grouping: tuple does not rearrange the input");
        used[pos] = true;
        img[k] = static_cast<int>(pos + 1);
    }
    gr.carrier = Permutation(std::move(img));
    return gr;
}

std::vector<int> grouping_tuple(const Grouping& gr) {
    std::vector<int> tuple;
    tuple.reserve(static_cast<size_t>(gr.lambda.weight()));
    for (int i = 0; i < gr.lambda.length(); ++i)
        tuple.insert(tuple.end(), static_cast<size_t>(gr.lambda.parts()[static_cast<size_t>(i)]),
                     gr.values[static_cast<size_t>(i)]);
    return tuple;
}

long long invariant_count(const BlockAlgebraElement& e_blocks) {
    const int r = e_blocks.degree();
    if (r % 2 != 0) throw Error("invariant count: degree must be even");
    MultiplicityBounds mult = ideal_multiplicities(e_blocks);
    return invariant_count(SchurExpansion(mult.begin(), mult.end()), r / 2);
}

long long invariant_count(const GroupRingElement& e, const NaturalRepCache& cache) {
    return invariant_count(fourier(e, cache));
}

long long invariant_count(const SchurExpansion& constituents, int l) {
    if (l < 1) throw Error("invariant count: need l >= 1");
    long long total = 0;
    for (const Partition& mu : enumerate_partitions(l)) {
        std::vector<int> doubled = mu.parts();
        for (int& p : doubled) p *= 2;
        auto it = constituents.find(Partition(std::move(doubled)));
        if (it != constituents.end()) total += it->second;
    }
    return total;
}

}  // namespace symring
