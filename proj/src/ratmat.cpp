#include "e6/ratmat.hpp"

#include <algorithm>

namespace e6 {

std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (size_t k = c; k < m.cols; ++k) std::swap(m.at(r, k), m.at(p, k));
        Rat piv = m.at(r, c);
        for (size_t k = c; k < m.cols; ++k) m.at(r, k) /= piv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (size_t k = c; k < m.cols; ++k) m.at(i, k) -= f * m.at(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(QMat m) { return rref(m).size(); }

std::vector<std::vector<Rat>> kernel_basis(QMat m) {
    size_t n = m.cols;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(n);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat inverse(QMat m) {
    if (m.rows != m.cols) throw consistency_error("inverse of non-square matrix");
    size_t n = m.rows;
    QMat aug(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1)
        throw consistency_error("singular matrix");
    QMat inv(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::vector<Rat> solve(QMat a, const std::vector<Rat>& b) {
    if (a.rows != a.cols || b.size() != a.rows)
        throw consistency_error("solve: shape mismatch");
    size_t n = a.rows;
    QMat aug(n, n + 1);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n) = b[r];
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != n - 1)
        throw consistency_error("solve: singular matrix");
    std::vector<Rat> x(n);
    for (size_t r = 0; r < n; ++r) x[r] = aug.at(r, n);
    return x;
}

Int det_int(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * m[n - 1][n - 1];
}

}  // namespace e6
