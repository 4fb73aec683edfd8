#include "symring/characters.hpp"

#include <algorithm>
#include <functional>

#include "symring/error.hpp"

namespace symring {

long long centralizer_order(const CycleType& mu) {
    long long z = 1;
    int run = 0;
    for (int i = 0; i < mu.length(); ++i) {
        const int part = mu.parts()[static_cast<size_t>(i)];
        run = (i > 0 && mu.parts()[static_cast<size_t>(i - 1)] == part) ? run + 1 : 1;
        z *= static_cast<long long>(part) * run;
    }
    return z;
}

namespace {

/// Removes every border strip of the given length from lam; for each
/// result calls visit(sign, remaining shape). Uses the beta-set picture:
/// a strip removal is beta_i -> beta_i - strip, legal when the target is
/// free, with sign (-1)^{#beta entries passed over}.
void for_each_strip_removal(const Partition& lam, int strip,
                            const std::function<void(int, const Partition&)>& visit) {
    const int l = lam.length();
    std::vector<int> beta(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lam.parts()[static_cast<size_t>(i)] + (l - 1 - i);
    for (int i = 0; i < l; ++i) {
        const int target = beta[static_cast<size_t>(i)] - strip;
        if (target < 0) continue;
        bool free_slot = true;
        int passed = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[static_cast<size_t>(j)] == target) {
                free_slot = false;
                break;
            }
            if (beta[static_cast<size_t>(j)] > target && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)]) ++passed;
        }
        if (!free_slot) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (int k = 0; k < l; ++k) {
            const int p = nb[static_cast<size_t>(k)] - (l - 1 - k);
            if (p > 0) parts.push_back(p);
        }
        visit(passed % 2 == 0 ? 1 : -1, Partition(std::move(parts)));
    }
}

long long mn_recurse(const Partition& lam, const std::vector<int>& mu, size_t k) {
    if (k == mu.size()) return lam.weight() == 0 ? 1 : 0;
    long long total = 0;
    for_each_strip_removal(lam, mu[k], [&](int sgn, const Partition& rest) {
        total += sgn * mn_recurse(rest, mu, k + 1);
    });
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const CycleType& mu) {
    if (lambda.weight() != mu.weight()) throw Error("character: |lambda| != |mu|");
    return mn_recurse(lambda, mu.parts(), 0);
}

CharacterTable character_table(int r) {
    if (r < 1 || r > 20) throw Error("character table supported for 1 <= r <= 20");
    CharacterTable t;
    t.row_partitions = enumerate_partitions(r);
    t.column_types = t.row_partitions;
    std::reverse(t.column_types.begin(), t.column_types.end());
    long long fact = 1;
    for (int k = 2; k <= r; ++k) fact *= k;
    for (const CycleType& mu : t.column_types) t.class_sizes.push_back(fact / centralizer_order(mu));
    for (const Partition& lam : t.row_partitions) {
        std::vector<long long> row;
        row.reserve(t.column_types.size());
        for (const CycleType& mu : t.column_types) row.push_back(mn_character(lam, mu));
        t.values.push_back(std::move(row));
    }
    return t;
}

namespace {

/// Counts semistandard skew fillings of gamma/alpha with content beta whose
/// reverse reading word is a lattice word. Cells are filled in reverse
/// reading order (rows top to bottom, right to left) so the lattice
/// condition is checked incrementally.
long long lr_fillings(const Partition& gamma, const Partition& alpha, const Partition& beta) {
    const int nrows = gamma.length();
    const int nvals = beta.length();
    std::vector<std::vector<int>> cell(static_cast<size_t>(nrows));
    for (int i = 0; i < nrows; ++i) {
        cell[static_cast<size_t>(i)].assign(static_cast<size_t>(gamma.part(i)), 0);
    }
    std::vector<int> used(static_cast<size_t>(nvals), 0);

    std::function<long long(int, int)> fill = [&](int i, int j) -> long long {
        while (i < nrows && j < alpha.part(i)) {
            ++i;
            j = i < nrows ? gamma.part(i) - 1 : 0;
        }
        if (i == nrows) return 1;
        long long total = 0;
        for (int v = 1; v <= nvals; ++v) {
            if (used[static_cast<size_t>(v - 1)] >= beta.part(v - 1)) continue;
            if (v >= 2 && used[static_cast<size_t>(v - 1)] >= used[static_cast<size_t>(v - 2)]) continue;
            if (j + 1 < gamma.part(i) && v > cell[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]) continue;
            if (i > 0 && j < gamma.part(i - 1) && j >= alpha.part(i - 1) &&
                v <= cell[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]) {
                continue;
            }
            cell[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            ++used[static_cast<size_t>(v - 1)];
            const int ni = j == alpha.part(i) ? i + 1 : i;
            const int nj = j == alpha.part(i) ? (ni < nrows ? gamma.part(ni) - 1 : 0) : j - 1;
            total += fill(ni, nj);
            --used[static_cast<size_t>(v - 1)];
            cell[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
        }
        return total;
    };

    const int start_row = 0;
    const int start_col = gamma.part(0) - 1;
    if (gamma.weight() == alpha.weight()) return 1;
    return fill(start_row, start_col);
}

bool contains(const Partition& gamma, const Partition& alpha) {
    for (int i = 0; i < alpha.length(); ++i) {
        if (gamma.part(i) < alpha.part(i)) return false;
    }
    return true;
}

}  // namespace

SchurExpansion lr_product(const Partition& alpha, const Partition& beta) {
    SchurExpansion out;
    for (const Partition& gamma : enumerate_partitions(alpha.weight() + beta.weight())) {
        if (!contains(gamma, alpha)) continue;
        const long long c = lr_fillings(gamma, alpha, beta);
        if (c != 0) out[gamma] = c;
    }
    return out;
}

SchurExpansion lr_product(const std::vector<Partition>& factors) {
    if (factors.empty()) throw Error("lr_product: no factors");
    SchurExpansion acc{{factors[0], 1}};
    for (size_t k = 1; k < factors.size(); ++k) {
        SchurExpansion next;
        for (const auto& [gamma, mult] : acc) {
            for (const auto& [delta, c] : lr_product(gamma, factors[k])) {
                next[delta] += mult * c;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

/// Symmetric function of one fixed degree in the power-sum basis:
/// cycle type -> coefficient.
using PowerSumExpr = std::map<Partition, Rational>;

PowerSumExpr schur_to_power_sums(const Partition& alpha) {
    PowerSumExpr out;
    for (const CycleType& mu : enumerate_partitions(alpha.weight())) {
        const long long chi = mn_character(alpha, mu);
        if (chi != 0) out[mu] = to_rational(chi) / to_rational(centralizer_order(mu));
    }
    return out;
}

/// p_k composed into f: every p_mu becomes p_{k*mu}.
PowerSumExpr stretch(const PowerSumExpr& f, int k) {
    PowerSumExpr out;
    for (const auto& [mu, c] : f) {
        std::vector<int> parts = mu.parts();
        for (int& p : parts) p *= k;
        out[Partition(std::move(parts))] += c;
    }
    return out;
}

PowerSumExpr multiply(const PowerSumExpr& f, const PowerSumExpr& g) {
    PowerSumExpr out;
    for (const auto& [mu, c] : f) {
        for (const auto& [nu, d] : g) {
            std::vector<int> parts = mu.parts();
            parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            out[Partition(std::move(parts))] += c * d;
        }
    }
    return out;
}

/// h_n[f] = sum over nu |- n of (1/z_nu) prod_i p_{nu_i}[f].
PowerSumExpr complete_plethysm(const PowerSumExpr& f, int n) {
    PowerSumExpr out;
    if (n == 0) {
        out[Partition()] = 1;
        return out;
    }
    for (const CycleType& nu : enumerate_partitions(n)) {
        PowerSumExpr term{{Partition(), Rational(1) / to_rational(centralizer_order(nu))}};
        for (int part : nu.parts()) term = multiply(term, stretch(f, part));
        for (const auto& [mu, c] : term) out[mu] += c;
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

SchurExpansion to_schur(const PowerSumExpr& f, int degree) {
    SchurExpansion out;
    for (const Partition& gamma : enumerate_partitions(degree)) {
        Rational m = 0;
        for (const auto& [mu, c] : f) m += c * to_rational(mn_character(gamma, mu));
        if (m == 0) continue;
        if (m.get_den() != 1) throw Error("plethysm: non-integral Schur multiplicity");
        out[gamma] = static_cast<long long>(m.get_num().get_si());
    }
    return out;
}

}  // namespace

SchurExpansion plethysm_sym_power(const Partition& alpha, int n) {
    if (n < 0) throw Error("plethysm: negative power");
    if (n == 0 || alpha.weight() == 0) {
        return SchurExpansion{{Partition(), 1}};
    }
    return to_schur(complete_plethysm(schur_to_power_sums(alpha), n), alpha.weight() * n);
}

SchurExpansion plethysm_sym_power(const SchurExpansion& f, int n) {
    if (n < 0) throw Error("plethysm: negative power");
    if (f.empty()) return n == 0 ? SchurExpansion{{Partition(), 1}} : SchurExpansion{};
    const int weight = f.begin()->first.weight();
    PowerSumExpr sum;
    for (const auto& [alpha, m] : f) {
        if (alpha.weight() != weight) throw Error("plethysm: mixed-weight multiset");
        if (m < 0) throw Error("plethysm: negative multiplicity");
        if (m == 0) continue;
        for (const auto& [mu, c] : schur_to_power_sums(alpha)) sum[mu] += to_rational(m) * c;
    }
    if (n == 0 || weight == 0) return SchurExpansion{{Partition(), 1}};
    return to_schur(complete_plethysm(sum, n), weight * n);
}

SchurExpansion lr_product(const SchurExpansion& a, const SchurExpansion& b) {
    SchurExpansion out;
    for (const auto& [alpha, ma] : a) {
        for (const auto& [beta, mb] : b) {
            for (const auto& [gamma, c] : lr_product(alpha, beta)) out[gamma] += ma * mb * c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SchurExpansion plethysm_product(const std::vector<std::pair<Partition, int>>& factors) {
    PowerSumExpr acc{{Partition(), Rational(1)}};
    int degree = 0;
    for (const auto& [alpha, m] : factors) {
        if (m < 0) throw Error("plethysm: negative multiplicity");
        if (m == 0 || alpha.weight() == 0) continue;
        acc = multiply(acc, complete_plethysm(schur_to_power_sums(alpha), m));
        degree += alpha.weight() * m;
    }
    if (degree == 0) return SchurExpansion{{Partition(), 1}};
    return to_schur(acc, degree);
}

}  // namespace symring
