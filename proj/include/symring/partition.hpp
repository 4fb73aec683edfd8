#pragma once

#include <compare>
#include <string>
#include <vector>

namespace symring {

/// Integer partition: weakly decreasing positive parts. Used both as an
/// irreducible-representation label lambda |- r and as a conjugacy-class
/// label (cycle type).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {  // 0-based, 0 beyond the last part
        return i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    /// "2,2,1"
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the part sequence ([1,1] < [2]); the library's
    /// canonical block order is reverse-lexicographic, i.e. descending here.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Cycle types are partitions of the degree.
using CycleType = Partition;

/// All partitions of r in reverse-lexicographic order: [r] first, [1^r] last.
std::vector<Partition> enumerate_partitions(int r);

/// Hook-length dimension f^lambda = r! / prod(hooks).
long long dimension(const Partition& lambda);

/// Parses "2,2,1".
Partition parse_partition(const std::string& text);

}  // namespace symring
