#pragma once

#include "kato/arith.hpp"

#include <optional>
#include <vector>

namespace kato {

// dense rational matrix, row major
struct QMatrix {
    long rows = 0, cols = 0;
    std::vector<Q> a;

    QMatrix() = default;
    QMatrix(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
    Q &operator()(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
    const Q &operator()(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

Q determinant(QMatrix m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<long> rref(QMatrix &m);

// One solution of m x = b (free variables set to 0), or nullopt when inconsistent.
std::optional<std::vector<Q>> solve_particular(const QMatrix &m, const std::vector<Q> &b);

// Same, for several right-hand sides at once (columns of B). nullopt if any is inconsistent.
std::optional<QMatrix> solve_particular_multi(const QMatrix &m, const QMatrix &B);

long rank(QMatrix m);

}  // namespace kato
