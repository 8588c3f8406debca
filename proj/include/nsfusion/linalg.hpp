#pragma once

#include <vector>

#include "nsfusion/radical.hpp"

namespace nsf::linalg {

/// Dense matrix over the radical ring.
class Matrix {
  public:
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    RadicalNumber& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const RadicalNumber& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

  private:
    size_t rows_, cols_;
    std::vector<RadicalNumber> a_;
};

/// Kernel basis in reduced row echelon form (one vector per free column,
/// with entry 1 at that column).  Uses exact division, so matrix entries
/// must stay inside quadratic subfields; every kernel in scope is over Q.
inline std::vector<std::vector<RadicalNumber>> kernel_basis(Matrix m) {
    const size_t nr = m.rows(), nc = m.cols();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t p = row;
        while (p < nr && m.at(p, col).is_zero()) ++p;
        if (p == nr) continue;
        if (p != row)
            for (size_t j = 0; j < nc; ++j) std::swap(m.at(p, j), m.at(row, j));
        RadicalNumber inv = m.at(row, col).inverse();
        for (size_t j = col; j < nc; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            RadicalNumber f = m.at(i, col);
            for (size_t j = col; j < nc; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<RadicalNumber>> basis;
    for (size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<RadicalNumber> v(nc);
        v[free] = RadicalNumber(1);
        for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank by division-free (cross-multiplication) elimination; valid over the
/// whole radical ring, where pivots need not be invertible in closed form.
inline size_t rank_division_free(Matrix m) {
    const size_t nr = m.rows(), nc = m.cols();
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t p = row;
        while (p < nr && m.at(p, col).is_zero()) ++p;
        if (p == nr) continue;
        if (p != row)
            for (size_t j = 0; j < nc; ++j) std::swap(m.at(p, j), m.at(row, j));
        const RadicalNumber pivot = m.at(row, col);
        for (size_t i = row + 1; i < nr; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const RadicalNumber f = m.at(i, col);
            for (size_t j = col; j < nc; ++j) m.at(i, j) = pivot * m.at(i, j) - f * m.at(row, j);
        }
        ++row;
    }
    return row;
}

}  // namespace nsf::linalg
