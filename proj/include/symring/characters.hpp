#pragma once

#include <map>
#include <vector>

#include "symring/partition.hpp"
#include "symring/rational.hpp"

namespace symring {

/// Centralizer order z_mu = prod_j j^{m_j} m_j! of a cycle type.
long long centralizer_order(const CycleType& mu);

/// Irreducible character value chi^lambda(mu) via the Murnaghan-Nakayama
/// border-strip recursion. |lambda| must equal |mu|.
long long mn_character(const Partition& lambda, const CycleType& mu);

struct CharacterTable {
    /// Row labels: partitions of r in reverse-lexicographic order.
    std::vector<Partition> row_partitions;
    /// Column labels: cycle types in ascending lexicographic order, so the
    /// identity class comes first.
    std::vector<CycleType> column_types;
    std::vector<long long> class_sizes;
    /// values[i][j] = chi^{row i}(column j).
    std::vector<std::vector<long long>> values;
};

CharacterTable character_table(int r);

/// Multiplicity expansion of a symmetric-group-induced product or power in
/// the Schur basis: partition -> multiplicity, zero entries absent.
using SchurExpansion = std::map<Partition, long long>;

/// Littlewood-Richardson product [alpha][beta] counted by lattice-word
/// skew fillings.
SchurExpansion lr_product(const Partition& alpha, const Partition& beta);

/// Fold of lr_product over several factors.
SchurExpansion lr_product(const std::vector<Partition>& factors);

/// Bilinear extension of the product to multiplicity multisets.
SchurExpansion lr_product(const SchurExpansion& a, const SchurExpansion& b);

/// Symmetrized power [alpha] (.) [n]: the plethysm h_n[s_alpha] expanded
/// in the Schur basis. Computed through the power-sum basis.
SchurExpansion plethysm_sym_power(const Partition& alpha, int n);

/// h_n applied to a whole multiset (all partitions of one weight); the
/// symmetrized power of a reducible module.
SchurExpansion plethysm_sym_power(const SchurExpansion& f, int n);

/// prod_i h_{m_i}[s_{alpha_i}] for a multiset {alpha_i with multiplicity
/// m_i}, expanded in the Schur basis.
SchurExpansion plethysm_product(const std::vector<std::pair<Partition, int>>& factors);

}  // namespace symring
