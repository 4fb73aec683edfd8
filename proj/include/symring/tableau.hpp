#pragma once

#include <string>
#include <vector>

#include "symring/partition.hpp"
#include "symring/permutation.hpp"

namespace symring {

/// A Young tableau of some shape: rows of distinct entries from {1..r}.
/// Standard means rows and columns strictly increase.
class StandardTableau {
public:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int degree() const { return shape_.weight(); }

    bool is_standard() const;

    /// Rows concatenated top to bottom; the ordering key for tableau lists.
    std::vector<int> row_word() const;

    /// 0-based row/column of a value.
    int row_of(int value) const;
    int col_of(int value) const;

    /// Entry-wise relabeling: entry e becomes p(e). Shape is kept, the
    /// result is usually not standard.
    StandardTableau relabeled(const Permutation& p) const;

    std::string str() const;

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// All standard tableaux of the shape, sorted lexicographically by row word.
/// Their positions index the irreducible representation basis everywhere.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// The lex-least standard tableau (rows filled 1,2,... left to right, top
/// to bottom).
StandardTableau row_filled_tableau(const Partition& shape);

/// All permutations preserving each row of t as a set.
std::vector<Permutation> row_stabilizer(const StandardTableau& t);

/// All permutations preserving each column of t as a set.
std::vector<Permutation> column_stabilizer(const StandardTableau& t);

/// Permutations that move whole rows of exactly the given length onto one
/// another (positionwise), fixing everything else. With k such rows this
/// is a copy of S_k.
std::vector<Permutation> row_block_permuters(const StandardTableau& t, int row_length);

}  // namespace symring
