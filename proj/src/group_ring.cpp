#include "symring/group_ring.hpp"

#include <sstream>

#include "symring/error.hpp"

namespace symring {

GroupRingElement::GroupRingElement(int degree) : degree_(degree) {
    if (degree < 1) throw Error("group ring: degree must be positive");
}

GroupRingElement GroupRingElement::one(int degree) {
    return basis(Permutation::identity(degree));
}

GroupRingElement GroupRingElement::basis(const Permutation& p, const Rational& coeff) {
    GroupRingElement a(p.degree());
    a.add_term(p, coeff);
    return a;
}

Rational GroupRingElement::coeff(const Permutation& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const Permutation& p, const Rational& c) {
    if (p.degree() != degree_) throw Error("group ring: term degree mismatch");
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
    if (other.degree_ != degree_) throw Error("group ring: degree mismatch in +");
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
    if (other.degree_ != degree_) throw Error("group ring: degree mismatch in -");
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.degree_ != b.degree_) throw Error("group ring: degree mismatch in *");
    GroupRingElement out(a.degree_);
    for (const auto& [p, cp] : a.terms_) {
        for (const auto& [q, cq] : b.terms_) {
            out.add_term(compose(p, q), cp * cq);
        }
    }
    return out;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) out << " + ";
        out << to_string(c) << " [" << p.str() << "]";
        first = false;
    }
    return out.str();
}

GroupRingElement star(const GroupRingElement& a) {
    GroupRingElement out(a.degree());
    for (const auto& [p, c] : a.terms()) out.add_term(inverse(p), c);
    return out;
}

GroupRingElement group_sum(int degree, const std::vector<Permutation>& perms) {
    GroupRingElement out(degree);
    for (const auto& p : perms) out.add_term(p, 1);
    return out;
}

GroupRingElement signed_group_sum(int degree, const std::vector<Permutation>& perms) {
    GroupRingElement out(degree);
    for (const auto& p : perms) out.add_term(p, sign(p));
    return out;
}

GroupRingElement young_symmetrizer(const StandardTableau& t) {
    const int r = t.degree();
    return group_sum(r, row_stabilizer(t)) * signed_group_sum(r, column_stabilizer(t));
}

}  // namespace symring
