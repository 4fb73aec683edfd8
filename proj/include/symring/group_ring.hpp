#pragma once

#include <map>
#include <string>

#include "symring/permutation.hpp"
#include "symring/rational.hpp"
#include "symring/tableau.hpp"

namespace symring {

/// A sparse rational linear combination of permutations of fixed degree.
/// Terms are keyed in lexicographic image-list order, which makes every
/// traversal (printing, hashing, comparison) deterministic.
class GroupRingElement {
public:
    explicit GroupRingElement(int degree);

    static GroupRingElement zero(int degree) { return GroupRingElement(degree); }
    static GroupRingElement one(int degree);
    static GroupRingElement basis(const Permutation& p, const Rational& coeff = 1);

    int degree() const { return degree_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of p (zero if absent).
    Rational coeff(const Permutation& p) const;
    /// Adds c to the coefficient of p, erasing the term if it cancels.
    void add_term(const Permutation& p, const Rational& c);

    GroupRingElement& operator+=(const GroupRingElement& other);
    GroupRingElement& operator-=(const GroupRingElement& other);
    GroupRingElement& operator*=(const Rational& c);

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        a += b;
        return a;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        a -= b;
        return a;
    }
    friend GroupRingElement operator*(GroupRingElement a, const Rational& c) {
        a *= c;
        return a;
    }
    friend GroupRingElement operator*(const Rational& c, GroupRingElement a) {
        a *= c;
        return a;
    }
    /// Convolution: (a*b)(s) = sum over p*q = s of a(p) b(q).
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    /// "3/2 [1 3 2] + 1 [2 1 3]", zero prints "0".
    std::string str() const;

private:
    int degree_;
    std::map<Permutation, Rational> terms_;
};

/// a* = sum a(p) p^{-1}; an involution with (ab)* = b* a*.
GroupRingElement star(const GroupRingElement& a);

/// Sum of the listed permutations with unit coefficients.
GroupRingElement group_sum(int degree, const std::vector<Permutation>& perms);

/// Sum of sign(p) * p over the list.
GroupRingElement signed_group_sum(int degree, const std::vector<Permutation>& perms);

/// y_t = (sum of the row stabilizer) * (signed sum of the column
/// stabilizer). Satisfies y*y = (r!/dim) y.
GroupRingElement young_symmetrizer(const StandardTableau& t);

}  // namespace symring
