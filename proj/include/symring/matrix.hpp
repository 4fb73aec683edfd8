#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symring/rational.hpp"

namespace symring {

/// Dense matrix over the rationals. All elimination uses the first nonzero
/// entry as pivot, so reduced forms (and everything computed from them)
/// are deterministic.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    Rational trace() const;

    QMatrix transposed() const;
    std::vector<Rational> row(size_t i) const;
    std::vector<Rational> col(size_t j) const;

    QMatrix& operator+=(const QMatrix& other);
    QMatrix& operator-=(const QMatrix& other);
    QMatrix& operator*=(const Rational& c);

    friend QMatrix operator+(QMatrix a, const QMatrix& b) {
        a += b;
        return a;
    }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) {
        a -= b;
        return a;
    }
    friend QMatrix operator*(QMatrix a, const Rational& c) {
        a *= c;
        return a;
    }
    friend QMatrix operator*(const Rational& c, QMatrix a) {
        a *= c;
        return a;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Row-reduced echelon form and the pivot column of each nonzero row.
struct Echelon {
    QMatrix reduced;
    std::vector<size_t> pivot_cols;
};

Echelon rref(QMatrix m);

size_t rank(const QMatrix& m);

/// Basis of {x : m x = 0}, one column vector per matrix, in the
/// deterministic order given by ascending free column.
std::vector<QMatrix> nullspace(const QMatrix& m);

/// Solves m x = rhs (rhs may have several columns). Throws when
/// inconsistent; free variables are set to zero.
QMatrix solve(const QMatrix& m, const QMatrix& rhs);

/// Rows of m restricted to a maximal independent subset, in original order.
QMatrix row_basis(const QMatrix& m);

/// Inverse of a square matrix; throws when singular.
QMatrix inverse(const QMatrix& m);

/// trace(a * b) without forming the product.
Rational trace_product(const QMatrix& a, const QMatrix& b);

}  // namespace symring
