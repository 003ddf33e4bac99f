#include "repvar/order.hpp"

#include <algorithm>

namespace repvar {

namespace {
// Full column rank over Q, by fraction-free elimination on exact rationals.
bool full_column_rank(const std::vector<std::vector<long>>& rows, int ncols) {
    std::vector<std::vector<Rat>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> rr(r.begin(), r.end());
        m.push_back(std::move(rr));
    }
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(m.size()); ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) return false; // column depends on earlier pivot columns
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
        for (int i = rank + 1; i < static_cast<int>(m.size()); ++i) {
            Rat f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] /
                    m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < ncols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank == ncols;
}
} // namespace

MatrixMonomialOrder::MatrixMonomialOrder(PolynomialRing ring, std::vector<std::vector<long>> weights)
    : ring_(std::move(ring)), rows_(std::move(weights)) {
    const int n = ring_.nvars();
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) != n)
            throw DimensionMismatchError("weight row length != variable count");
    if (!full_column_rank(rows_, n))
        throw Error("weight matrix does not have full column rank; order is not total");
}

MatrixMonomialOrder MatrixMonomialOrder::deglex(const PolynomialRing& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long>> rows;
    rows.emplace_back(std::vector<long>(static_cast<std::size_t>(n), 1));
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<long> r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(r));
    }
    return MatrixMonomialOrder(ring, std::move(rows));
}

MatrixMonomialOrder MatrixMonomialOrder::degrevlex(const PolynomialRing& ring) {
    const int n = ring.nvars();
    std::vector<std::vector<long>> rows;
    rows.emplace_back(std::vector<long>(static_cast<std::size_t>(n), 1));
    for (int i = n - 1; i > 0; --i) {
        std::vector<long> r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = -1;
        rows.push_back(std::move(r));
    }
    return MatrixMonomialOrder(ring, std::move(rows));
}

Cmp MatrixMonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    const int n = ring_.nvars();
    if (a.size() != n || b.size() != n)
        throw DimensionMismatchError("exponent vector does not match order's ring");
    for (const auto& row : rows_) {
        long long s = 0;
        for (int j = 0; j < n; ++j)
            s += static_cast<long long>(row[static_cast<std::size_t>(j)]) * (a[j] - b[j]);
        if (s > 0) return Cmp::Greater;
        if (s < 0) return Cmp::Less;
    }
    return Cmp::Equal;
}

bool MatrixMonomialOrder::is_degree_modified() const {
    if (rows_.empty()) return false;
    const auto& r0 = rows_.front();
    long v = r0.front();
    if (v <= 0) return false;
    return std::all_of(r0.begin(), r0.end(), [&](long x) { return x == v; });
}

bool MatrixMonomialOrder::eliminates_complement_of(const std::vector<int>& keep_indices) const {
    const int n = ring_.nvars();
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    for (int k : keep_indices) keep[static_cast<std::size_t>(k)] = true;
    // First row touching a kept variable.
    std::size_t rstar = rows_.size();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (int j = 0; j < n; ++j)
            if (keep[static_cast<std::size_t>(j)] && rows_[r][static_cast<std::size_t>(j)] != 0) {
                rstar = r;
                break;
            }
        if (rstar == r) break;
    }
    // Rows before rstar must be nonnegative on eliminated columns, and every
    // eliminated column must get a positive entry somewhere among them.
    for (int j = 0; j < n; ++j) {
        if (keep[static_cast<std::size_t>(j)]) continue;
        bool positive = false;
        for (std::size_t r = 0; r < rstar; ++r) {
            long w = rows_[r][static_cast<std::size_t>(j)];
            if (w < 0) return false;
            if (w > 0) positive = true;
        }
        if (!positive) return false;
    }
    return true;
}

} // namespace repvar
