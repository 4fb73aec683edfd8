#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "symring/partition.hpp"

namespace symring {

/// Degrees above this are refused unless the caller raises the guard
/// explicitly (CLI: --force).
inline constexpr int kDegreeGuard = 8;

/// A permutation p of {1..r}, stored as its image list: images[i-1] = p(i).
/// Composition is (p*q)(i) = p(q(i)); every identity in the library
/// (the T_b lemma, the star involution, the DFT) relies on this convention.
class Permutation {
public:
    Permutation() : images_{1} {}
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    /// The transposition (a b) in S_degree.
    static Permutation transposition(int degree, int a, int b);

    int degree() const { return static_cast<int>(images_.size()); }
    /// 1-based application: p(i).
    int operator()(int i) const { return images_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    /// "2 3 1"
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on image lists; also the enumeration order.
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// (p*q)(i) = p(q(i)). Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

std::pair<CycleType, int> cycle_type_and_sign(const Permutation& p);
int sign(const Permutation& p);

/// All r! permutations in lexicographic order. Throws GuardError when
/// degree exceeds the guard.
std::vector<Permutation> enumerate_sym_group(int degree, int guard = kDegreeGuard);

struct ConjugacyClass {
    CycleType type;
    long long size = 0;
    Permutation representative;
};

/// Classes keyed by cycle type, in reverse-lexicographic type order.
std::vector<ConjugacyClass> class_data(int degree, int guard = kDegreeGuard);

/// Writes p as a product of adjacent transpositions s_k = (k, k+1):
/// p = s_{f[0]} * s_{f[1]} * ... * s_{f.back()}.
std::vector<int> factor_adjacent(const Permutation& p);

/// Steinhaus-Johnson-Trotter enumeration: visits all degree! permutations,
/// consecutive ones differing by one adjacent transposition. The visitor
/// receives (current, k) with current = previous * s_k; the first call
/// passes the identity and k = -1. Not guard-checked: callers stream
/// through the group without materializing it.
void plain_changes(int degree, const std::function<void(const Permutation&, int)>& visit);

Permutation parse_permutation(const std::string& text);

}  // namespace symring
