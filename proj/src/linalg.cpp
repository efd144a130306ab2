#include "linalg.hpp"

#include <algorithm>

namespace qe::linalg {

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

QMat to_rational(const Mat& m) {
    QMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[i] = QVec(m[i].begin(), m[i].end());
    return out;
}

// Reduced row echelon form; returns pivot column per row.
std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        mpq_class inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            mpq_class f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Vec clear_denominators(const QVec& v) {
    mpz_class lcm = 1;
    for (const auto& e : v) {
        mpz_class den = e.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Vec out(v.size());
    mpz_class content = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        mpq_class scaled = v[i] * mpq_class(lcm);
        out[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& e : out) e /= content;
    return out;
}

}  // namespace

int rank(Mat m) {
    QMat q = to_rational(m);
    return static_cast<int>(rref(q).size());
}

std::vector<Vec> nullspace(const Mat& m, size_t cols) {
    QMat q = to_rational(m);
    std::vector<size_t> pivots = rref(q);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(cols, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -q[r][free_col];
        basis.push_back(clear_denominators(v));
    }
    return basis;
}

bool solve_full_column_rank(const Mat& m, const Vec& rhs, std::vector<mpq_class>& x) {
    size_t cols = m.empty() ? 0 : m[0].size();
    QMat aug(m.size(), QVec(cols + 1));
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = mpq_class(m[i][j]);
        aug[i][cols] = mpq_class(rhs[i]);
    }
    std::vector<size_t> pivots = rref(aug);
    x.assign(cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return false;  // inconsistent row 0 ... 0 | 1
        x[pivots[r]] = aug[r][cols];
    }
    return true;
}

}  // namespace qe::linalg
