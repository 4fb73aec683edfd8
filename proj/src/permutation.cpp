#include "symring/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symring/error.hpp"

namespace symring {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("permutation: empty image list");
    const int r = static_cast<int>(images_.size());
    std::vector<char> seen(static_cast<size_t>(r), 0);
    for (int v : images_) {
        if (v < 1 || v > r) {
            throw Error("permutation: image " + std::to_string(v) +
                        " out of range 1.." + std::to_string(r));
        }
        if (seen[static_cast<size_t>(v - 1)]++) {
            throw Error("permutation: repeated image " + std::to_string(v));
        }
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1) throw Error("permutation: degree must be positive");
    std::vector<int> im(static_cast<size_t>(degree));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 1 || b < 1 || a > degree || b > degree || a == b) {
        throw Error("permutation: bad transposition (" + std::to_string(a) + " " +
                    std::to_string(b) + ") in degree " + std::to_string(degree));
    }
    Permutation p = identity(degree);
    std::swap(p.images_[static_cast<size_t>(a - 1)], p.images_[static_cast<size_t>(b - 1)]);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i) {
        if ((*this)(i) != i) return false;
    }
    return true;
}

std::string Permutation::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i) out << ' ';
        out << images_[i];
    }
    return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) {
        throw Error("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                    std::to_string(q.degree()));
    }
    std::vector<int> im(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) im[static_cast<size_t>(i - 1)] = p(q(i));
    return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> im(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) im[static_cast<size_t>(p(i) - 1)] = i;
    return Permutation(std::move(im));
}

std::pair<CycleType, int> cycle_type_and_sign(const Permutation& p) {
    const int r = p.degree();
    std::vector<char> seen(static_cast<size_t>(r), 0);
    std::vector<int> lengths;
    for (int i = 1; i <= r; ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j - 1)]; j = p(j)) {
            seen[static_cast<size_t>(j - 1)] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    const int sgn = (r - static_cast<int>(lengths.size())) % 2 == 0 ? 1 : -1;
    return {CycleType(std::move(lengths)), sgn};
}

int sign(const Permutation& p) { return cycle_type_and_sign(p).second; }

std::vector<Permutation> enumerate_sym_group(int degree, int guard) {
    if (degree < 1) throw Error("enumerate_sym_group: degree must be positive");
    if (degree > guard) {
        throw GuardError("refusing to enumerate S_" + std::to_string(degree) +
                         " (guard is " + std::to_string(guard) + ")");
    }
    std::vector<int> im(static_cast<size_t>(degree));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<ConjugacyClass> class_data(int degree, int guard) {
    if (degree < 1) throw Error("class_data: degree must be positive");
    if (degree > guard) {
        throw GuardError("refusing class data for S_" + std::to_string(degree) +
                         " (guard is " + std::to_string(guard) + ")");
    }
    std::vector<ConjugacyClass> out;
    for (const Partition& mu : enumerate_partitions(degree)) {
        // |class| = r! / z_mu with z_mu = prod_j j^{m_j} m_j!.
        long long z = 1;
        int run = 0;
        for (size_t i = 0; i < mu.parts().size(); ++i) {
            const int part = mu.parts()[i];
            run = (i > 0 && mu.parts()[i - 1] == part) ? run + 1 : 1;
            z *= part * run;
        }
        long long fact = 1;
        for (int k = 2; k <= degree; ++k) fact *= k;

        std::vector<int> im(static_cast<size_t>(degree));
        int base = 0;
        for (int part : mu.parts()) {
            for (int j = 0; j < part; ++j) {
                im[static_cast<size_t>(base + j)] = base + 1 + (j + 1) % part;
            }
            base += part;
        }
        out.push_back({mu, fact / z, Permutation(std::move(im))});
    }
    return out;
}

std::vector<int> factor_adjacent(const Permutation& p) {
    // Bubble-sort the image list; swapping slots (k, k+1) is right-composition
    // with s_k, so p * s_{k1} * ... * s_{km} = id and the factorization is the
    // swap list reversed.
    std::vector<int> im = p.images();
    const int r = static_cast<int>(im.size());
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int k = 0; k + 1 < r; ++k) {
            if (im[static_cast<size_t>(k)] > im[static_cast<size_t>(k + 1)]) {
                std::swap(im[static_cast<size_t>(k)], im[static_cast<size_t>(k + 1)]);
                swaps.push_back(k + 1);
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

void plain_changes(int degree, const std::function<void(const Permutation&, int)>& visit) {
    if (degree < 1) throw Error("plain_changes: degree must be positive");
    std::vector<int> im(static_cast<size_t>(degree));
    std::iota(im.begin(), im.end(), 1);
    // dir[v-1]: -1 = value v looks left, +1 = looks right.
    std::vector<int> dir(static_cast<size_t>(degree), -1);
    Permutation current(im);
    visit(current, -1);
    for (;;) {
        int mobile = 0;
        int mobile_pos = -1;
        for (int pos = 0; pos < degree; ++pos) {
            const int v = im[static_cast<size_t>(pos)];
            const int npos = pos + dir[static_cast<size_t>(v - 1)];
            if (npos < 0 || npos >= degree) continue;
            if (im[static_cast<size_t>(npos)] < v && v > mobile) {
                mobile = v;
                mobile_pos = pos;
            }
        }
        if (mobile == 0) break;
        const int npos = mobile_pos + dir[static_cast<size_t>(mobile - 1)];
        std::swap(im[static_cast<size_t>(mobile_pos)], im[static_cast<size_t>(npos)]);
        for (int v = mobile + 1; v <= degree; ++v) dir[static_cast<size_t>(v - 1)] *= -1;
        current = Permutation(im);
        visit(current, std::min(mobile_pos, npos) + 1);
    }
}

Permutation parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> im;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            im.push_back(v);
        } catch (const std::exception&) {
            throw Error("permutation: bad token '" + tok + "' in \"" + text + "\"");
        }
    }
    if (im.empty()) throw Error("permutation: empty input");
    return Permutation(std::move(im));
}

}  // namespace symring
