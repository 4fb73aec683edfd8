#include "symring/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "symring/error.hpp"

namespace symring {

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.length()) {
        throw Error("tableau: row count does not match shape");
    }
    const int r = shape_.weight();
    std::vector<char> seen(static_cast<size_t>(r), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (static_cast<int>(rows_[i].size()) != shape_.parts()[i]) {
            throw Error("tableau: row " + std::to_string(i + 1) + " does not match shape");
        }
        for (int v : rows_[i]) {
            if (v < 1 || v > r || seen[static_cast<size_t>(v - 1)]++) {
                throw Error("tableau: entries must be a permutation of 1.." + std::to_string(r));
            }
        }
    }
}

bool StandardTableau::is_standard() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j + 1 < rows_[i].size() && rows_[i][j] >= rows_[i][j + 1]) return false;
            if (i + 1 < rows_.size() && j < rows_[i + 1].size() && rows_[i][j] >= rows_[i + 1][j]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> StandardTableau::row_word() const {
    std::vector<int> word;
    word.reserve(static_cast<size_t>(degree()));
    for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
    return word;
}

int StandardTableau::row_of(int value) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (int v : rows_[i]) {
            if (v == value) return static_cast<int>(i);
        }
    }
    throw Error("tableau: value " + std::to_string(value) + " not present");
}

int StandardTableau::col_of(int value) const {
    for (const auto& row : rows_) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] == value) return static_cast<int>(j);
        }
    }
    throw Error("tableau: value " + std::to_string(value) + " not present");
}

StandardTableau StandardTableau::relabeled(const Permutation& p) const {
    if (p.degree() != degree()) throw Error("tableau: relabel degree mismatch");
    std::vector<std::vector<int>> rows = rows_;
    for (auto& row : rows) {
        for (int& v : row) v = p(v);
    }
    return StandardTableau(shape_, std::move(rows));
}

std::string StandardTableau::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << " | ";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ' ';
            out << rows_[i][j];
        }
    }
    return out.str();
}

namespace {

void grow_tableaux(const Partition& shape, int next, std::vector<std::vector<int>>& rows,
                   std::vector<int>& fill, std::vector<StandardTableau>& out) {
    const int r = shape.weight();
    if (next > r) {
        out.emplace_back(shape, rows);
        return;
    }
    for (size_t i = 0; i < static_cast<size_t>(shape.length()); ++i) {
        // next goes at the end of row i if the row has room and the cell
        // above is already filled.
        if (fill[i] >= shape.parts()[i]) continue;
        if (i > 0 && fill[i - 1] <= fill[i]) continue;
        rows[i].push_back(next);
        ++fill[i];
        grow_tableaux(shape, next + 1, rows, fill, out);
        --fill[i];
        rows[i].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
    std::vector<int> fill(static_cast<size_t>(shape.length()), 0);
    std::vector<StandardTableau> out;
    grow_tableaux(shape, 1, rows, fill, out);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_word() < b.row_word();
    });
    return out;
}

StandardTableau row_filled_tableau(const Partition& shape) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
    int next = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < shape.parts()[i]; ++j) rows[i].push_back(next++);
    }
    return StandardTableau(shape, std::move(rows));
}

namespace {

/// Direct product of symmetric groups acting on the given blocks of values.
std::vector<Permutation> block_product_group(int degree, const std::vector<std::vector<int>>& blocks) {
    std::vector<Permutation> out{Permutation::identity(degree)};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        const auto sub = enumerate_sym_group(static_cast<int>(block.size()));
        std::vector<Permutation> next;
        next.reserve(out.size() * sub.size());
        for (const auto& base : out) {
            for (const auto& s : sub) {
                std::vector<int> im = base.images();
                for (size_t j = 0; j < block.size(); ++j) {
                    im[static_cast<size_t>(block[j] - 1)] =
                        base(block[static_cast<size_t>(s(static_cast<int>(j) + 1) - 1)]);
                }
                next.emplace_back(std::move(im));
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Permutation> row_stabilizer(const StandardTableau& t) {
    return block_product_group(t.degree(), t.rows());
}

std::vector<Permutation> column_stabilizer(const StandardTableau& t) {
    std::vector<std::vector<int>> cols(static_cast<size_t>(t.shape().part(0)));
    for (const auto& row : t.rows()) {
        for (size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
    }
    return block_product_group(t.degree(), cols);
}

std::vector<Permutation> row_block_permuters(const StandardTableau& t, int row_length) {
    std::vector<size_t> rows_of_len;
    for (size_t i = 0; i < t.rows().size(); ++i) {
        if (static_cast<int>(t.rows()[i].size()) == row_length) rows_of_len.push_back(i);
    }
    const int k = static_cast<int>(rows_of_len.size());
    std::vector<Permutation> out;
    if (k == 0) {
        out.push_back(Permutation::identity(t.degree()));
        return out;
    }
    for (const auto& s : enumerate_sym_group(k)) {
        std::vector<int> im(static_cast<size_t>(t.degree()));
        for (int v = 1; v <= t.degree(); ++v) im[static_cast<size_t>(v - 1)] = v;
        for (int i = 0; i < k; ++i) {
            const auto& src = t.rows()[rows_of_len[static_cast<size_t>(i)]];
            const auto& dst = t.rows()[rows_of_len[static_cast<size_t>(s(i + 1) - 1)]];
            for (size_t j = 0; j < src.size(); ++j) im[static_cast<size_t>(src[j] - 1)] = dst[j];
        }
        out.emplace_back(std::move(im));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symring
