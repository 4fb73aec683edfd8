#include "symring/identities.hpp"

#include <algorithm>

#include "symring/error.hpp"
#include "symring/matrix.hpp"

namespace symring {

namespace {

std::vector<Permutation> sorted_candidates(std::vector<Permutation> candidates, int degree) {
    for (const Permutation& p : candidates) {
        if (p.degree() != degree) throw Error("identities: candidate degree mismatch");
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

/// Nullspace of the system rows, as echelon row vectors over the columns.
IdentityBasis solve_system(std::vector<Permutation> candidates,
                           const std::vector<std::vector<Rational>>& rows) {
    const size_t n = candidates.size();
    QMatrix m(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    std::vector<std::vector<Rational>> vectors;
    for (const QMatrix& v : nullspace(m)) {
        std::vector<Rational> x(n);
        for (size_t j = 0; j < n; ++j) x[j] = v.at(j, 0);
        vectors.push_back(std::move(x));
    }
    const long long w_rank = static_cast<long long>(n - vectors.size());
    return IdentityBasis{std::move(candidates), std::move(vectors), w_rank};
}

}  // namespace

IdentityBasis orthogonal_identities(const std::vector<GroupRingElement>& w_basis,
                                    std::vector<Permutation> candidates) {
    if (candidates.empty()) return IdentityBasis{{}, {}, 0};
    const int degree = candidates.front().degree();
    candidates = sorted_candidates(std::move(candidates), degree);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(w_basis.size());
    for (const GroupRingElement& h : w_basis) {
        if (h.degree() != degree) throw Error("identities: basis degree mismatch");
        std::vector<Rational> row(candidates.size());
        for (size_t j = 0; j < candidates.size(); ++j) row[j] = h.coeff(candidates[j]);
        rows.push_back(std::move(row));
    }
    return solve_system(std::move(candidates), rows);
}

IdentityBasis orthogonal_identities(const FactoredSubspace& w,
                                    std::vector<Permutation> candidates,
                                    const NaturalRepCache& cache) {
    if (candidates.empty()) return IdentityBasis{{}, {}, 0};
    const int degree = cache.degree();
    candidates = sorted_candidates(std::move(candidates), degree);
    Rational group_order = 1;
    for (int k = 2; k <= degree; ++k) group_order *= k;
    std::vector<std::vector<Rational>> rows;
    for (const auto& [block, ur] : w.factors) {
        const QMatrix& u = ur.first;
        const QMatrix& r = ur.second;
        const Rational scale = to_rational(dimension(w.shape->label(block))) / group_order;
        // evaluations[c] (j,i) = (R rep(p_c^{-1}) U)(j,i), so that row
        // (block,i,j) holds h_{ij}(p_c) = scale * evaluations[c](j,i).
        std::vector<QMatrix> evaluations;
        evaluations.reserve(candidates.size());
        for (const Permutation& p : candidates)
            evaluations.push_back(r * (cache.rep_matrix(block, inverse(p)) * u));
        for (size_t i = 0; i < u.cols(); ++i) {
            for (size_t j = 0; j < r.rows(); ++j) {
                std::vector<Rational> row(candidates.size());
                for (size_t c = 0; c < candidates.size(); ++c)
                    row[c] = scale * evaluations[c].at(j, i);
                rows.push_back(std::move(row));
            }
        }
    }
    return solve_system(std::move(candidates), rows);
}

Expression reduce_expression(const Expression& tau, const IdentityBasis& ids) {
    const size_t n = ids.candidates.size();
    std::vector<Rational> x(n, Rational(0));
    for (const auto& [p, c] : tau.terms) {
        const auto it = std::lower_bound(ids.candidates.begin(), ids.candidates.end(), p);
        if (it == ids.candidates.end() || !(*it == p))
            throw Error("reduce: expression permutation outside the candidate set");
        x[static_cast<size_t>(it - ids.candidates.begin())] = c;
    }
    // Echelon form of the identity span with columns walked from the
    // lexicographically largest permutation down, so those become the
    // eliminated (pivot) coordinates.
    std::vector<std::vector<Rational>> work = ids.vectors;
    std::vector<std::pair<size_t, size_t>> pivots;  // (column, work row)
    size_t next = 0;
    for (size_t rev = 0; rev < n && next < work.size(); ++rev) {
        const size_t col = n - 1 - rev;
        size_t found = work.size();
        for (size_t i = next; i < work.size(); ++i) {
            if (work[i][col] != 0) {
                found = i;
                break;
            }
        }
        if (found == work.size()) continue;
        std::swap(work[next], work[found]);
        const Rational inv = Rational(1) / work[next][col];
        for (Rational& v : work[next]) v *= inv;
        for (size_t i = 0; i < work.size(); ++i) {
            if (i == next || work[i][col] == 0) continue;
            const Rational f = work[i][col];
            for (size_t j = 0; j < n; ++j) work[i][j] -= f * work[next][j];
        }
        pivots.emplace_back(col, next);
        ++next;
    }
    for (const auto& [col, row] : pivots) {
        if (x[col] == 0) continue;
        const Rational f = x[col];
        for (size_t j = 0; j < n; ++j) x[j] -= f * work[row][j];
    }
    Expression out{tau.r, tau.contraction, {}};
    for (size_t j = 0; j < n; ++j) {
        if (x[j] != 0) out.terms.emplace(ids.candidates[j], x[j]);
    }
    return out;
}

std::vector<ComponentExpression> split_by_idempotents(const Expression& tau,
                                                      const DecompositionResult& parts) {
    if (parts.ring_idempotents.size() != parts.block_idempotents.size())
        throw Error("split: decomposition lacks ring-domain idempotents");
    std::vector<ComponentExpression> out;
    out.reserve(parts.ring_idempotents.size());
    for (const GroupRingElement& e : parts.ring_idempotents) {
        if (e.degree() != tau.r) throw Error("split: component degree mismatch");
        out.push_back(ComponentExpression{star(e), tau});
    }
    return out;
}

}  // namespace symring
