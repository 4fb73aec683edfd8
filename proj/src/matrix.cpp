#include "symring/matrix.hpp"

#include <sstream>

#include "symring/error.hpp"

namespace symring {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const Rational& v : data_) {
        if (v != 0) return false;
    }
    return true;
}

Rational QMatrix::trace() const {
    if (rows_ != cols_) throw Error("matrix: trace of non-square matrix");
    Rational t = 0;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

QMatrix QMatrix::transposed() const {
    QMatrix m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    }
    return m;
}

std::vector<Rational> QMatrix::row(size_t i) const {
    std::vector<Rational> out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<Rational> QMatrix::col(size_t j) const {
    std::vector<Rational> out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix: shape mismatch in +");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("matrix: shape mismatch in -");
    for (size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
    for (Rational& v : data_) v *= c;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix: shape mismatch in *");
    QMatrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rational& v = a.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Rational& w = b.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    }
    return out;
}

std::string QMatrix::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        out << '[';
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << to_string(at(i, j));
        }
        out << "]\n";
    }
    return out.str();
}

Echelon rref(QMatrix m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        }
        const Rational inv = Rational(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

size_t rank(const QMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<QMatrix> nullspace(const QMatrix& m) {
    const Echelon e = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (size_t c : e.pivot_cols) is_pivot[c] = 1;
    std::vector<QMatrix> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QMatrix v(m.cols(), 1);
        v.at(free, 0) = 1;
        for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
            v.at(e.pivot_cols[i], 0) = -e.reduced.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix solve(const QMatrix& m, const QMatrix& rhs) {
    if (m.rows() != rhs.rows()) throw Error("matrix: solve shape mismatch");
    QMatrix aug(m.rows(), m.cols() + rhs.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        for (size_t j = 0; j < rhs.cols(); ++j) aug.at(i, m.cols() + j) = rhs.at(i, j);
    }
    const Echelon e = rref(std::move(aug));
    QMatrix x(m.cols(), rhs.cols());
    size_t row = 0;
    for (size_t c : e.pivot_cols) {
        if (c >= m.cols()) throw Error("matrix: inconsistent linear system");
        for (size_t j = 0; j < rhs.cols(); ++j) x.at(c, j) = e.reduced.at(row, m.cols() + j);
        ++row;
    }
    return x;
}

QMatrix row_basis(const QMatrix& m) {
    // Pivot columns of the transpose mark an independent subset of rows.
    const Echelon e = rref(m.transposed());
    QMatrix out(e.pivot_cols.size(), m.cols());
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(e.pivot_cols[i], j);
    }
    return out;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw Error("matrix: inverse of non-square matrix");
    const size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const Echelon e = rref(std::move(aug));
    if (e.pivot_cols.size() != n || e.pivot_cols.back() != n - 1) {
        throw Error("matrix: singular matrix has no inverse");
    }
    QMatrix out(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) out.at(i, j) = e.reduced.at(i, n + j);
    }
    return out;
}

Rational trace_product(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw Error("matrix: trace_product shape mismatch");
    }
    Rational t = 0;
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            const Rational& v = a.at(i, j);
            if (v != 0) t += v * b.at(j, i);
        }
    }
    return t;
}

}  // namespace symring
