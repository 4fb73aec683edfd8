#include "symring/partition.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include "symring/error.hpp"

namespace symring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition{};
    c.resize(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::vector<Partition> enumerate_partitions(int r) {
    if (r < 0) throw Error("partition weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-lex generation: always place the largest admissible part
    // first, so [r] comes first and [1^r] last.
    auto rec = [&](auto&& self, int remaining, int maxPart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

long long dimension(const Partition& lambda) {
    const auto& parts = lambda.parts();
    Partition conj = lambda.conjugate();
    mpz_class num = 1;
    for (int k = 2; k <= lambda.weight(); ++k) num *= k;
    mpz_class den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < parts[static_cast<size_t>(i)]; ++j) {
            int hook = (parts[static_cast<size_t>(i)] - j) + (conj.part(j) - i) - 1;
            den *= hook;
        }
    mpz_class f = num / den;
    return f.get_si();
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw Error("malformed partition '" + text + "'");
        }
    }
    if (parts.empty()) throw Error("empty partition '" + text + "'");
    return Partition(std::move(parts));
}

}  // namespace symring
