#include "kato/linalg.hpp"

#include <utility>

namespace kato {

Q determinant(QMatrix m) {
    if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
    long n = m.rows;
    Q det(1);
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long r = col; r < n; ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (long j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        Q p = m(col, col);
        det *= p;
        for (long r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            Q f = m(r, col) / p;
            for (long j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

std::vector<long> rref(QMatrix &m) {
    std::vector<long> pivots;
    long r = 0;
    for (long col = 0; col < m.cols && r < m.rows; ++col) {
        long piv = -1;
        for (long i = r; i < m.rows; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        Q inv = Q(1) / m(r, col);
        for (long j = col; j < m.cols; ++j) m(r, j) *= inv;
        for (long i = 0; i < m.rows; ++i) {
            if (i == r || m(i, col) == 0) continue;
            Q f = m(i, col);
            for (long j = col; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::optional<QMatrix> solve_particular_multi(const QMatrix &m, const QMatrix &B) {
    long n = m.cols, k = B.cols;
    QMatrix aug(m.rows, n + k);
    for (long i = 0; i < m.rows; ++i) {
        for (long j = 0; j < n; ++j) aug(i, j) = m(i, j);
        for (long j = 0; j < k; ++j) aug(i, n + j) = B(i, j);
    }
    // only eliminate on the first n columns
    std::vector<long> pivots;
    long r = 0;
    for (long col = 0; col < n && r < aug.rows; ++col) {
        long piv = -1;
        for (long i = r; i < aug.rows; ++i)
            if (aug(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (long j = 0; j < aug.cols; ++j) std::swap(aug(piv, j), aug(r, j));
        Q inv = Q(1) / aug(r, col);
        for (long j = col; j < aug.cols; ++j) aug(r, j) *= inv;
        for (long i = 0; i < aug.rows; ++i) {
            if (i == r || aug(i, col) == 0) continue;
            Q f = aug(i, col);
            for (long j = col; j < aug.cols; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    for (long i = r; i < aug.rows; ++i)
        for (long j = n; j < n + k; ++j)
            if (aug(i, j) != 0) return std::nullopt;
    QMatrix X(n, k);
    for (size_t t = 0; t < pivots.size(); ++t)
        for (long j = 0; j < k; ++j) X(pivots[t], j) = aug(static_cast<long>(t), n + j);
    return X;
}

std::optional<std::vector<Q>> solve_particular(const QMatrix &m, const std::vector<Q> &b) {
    QMatrix B(m.rows, 1);
    for (long i = 0; i < m.rows; ++i) B(i, 0) = b[static_cast<size_t>(i)];
    auto X = solve_particular_multi(m, B);
    if (!X) return std::nullopt;
    std::vector<Q> x(static_cast<size_t>(m.cols));
    for (long i = 0; i < m.cols; ++i) x[static_cast<size_t>(i)] = (*X)(i, 0);
    return x;
}

long rank(QMatrix m) { return static_cast<long>(rref(m).size()); }

}  // namespace kato
