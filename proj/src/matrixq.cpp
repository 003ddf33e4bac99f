#include "repvar/matrixq.hpp"

#include "repvar/errors.hpp"

namespace repvar {

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatQ MatQ::operator+(const MatQ& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatchError("matrix addition shape mismatch");
    MatQ m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatchError("matrix subtraction shape mismatch");
    MatQ m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (c_ != o.r_) throw DimensionMismatchError("matrix product shape mismatch");
    MatQ m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

MatQ MatQ::operator*(const Rat& k) const {
    MatQ m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * k;
    return m;
}

MatQ MatQ::transpose() const {
    MatQ m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

MatQ MatQ::augment_columns(const MatQ& o) const {
    if (r_ != o.r_) throw DimensionMismatchError("augment requires equal row counts");
    MatQ m(r_, c_ + o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
    }
    return m;
}

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(MatQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
} // namespace

std::size_t MatQ::rank() const {
    MatQ m(*this);
    return rref(m).size();
}

std::vector<std::vector<Rat>> MatQ::kernel() const {
    MatQ m(*this);
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(c_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> out;
    for (std::size_t free_col = 0; free_col < c_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(c_, Rat(0));
        v[free_col] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[pivots[pi]] = -m.at(pi, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::pair<Rat, Rat>> eigenvalues_2x2(const MatQ& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatchError("expected 2x2 matrix");
    Rat tr = m.at(0, 0) + m.at(1, 1);
    Rat det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Rat disc = tr * tr - 4 * det;
    auto s = rat_sqrt(disc);
    if (!s) return std::nullopt;
    return std::make_pair((tr + *s) / 2, (tr - *s) / 2);
}

} // namespace repvar
