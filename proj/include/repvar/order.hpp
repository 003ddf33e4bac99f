#ifndef REPVAR_ORDER_HPP
#define REPVAR_ORDER_HPP

#include <vector>

#include "repvar/ring.hpp"

namespace repvar {

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

// Integer weight-matrix term order: x^a > x^b iff the first nonzero entry of
// W*(a-b) is positive. The matrix must have full column rank so the order is
// total on monomials.
class MatrixMonomialOrder {
public:
    MatrixMonomialOrder() = default;
    MatrixMonomialOrder(PolynomialRing ring, std::vector<std::vector<long>> weights);

    // Degree then lexicographic by the ring's variable sequence.
    static MatrixMonomialOrder deglex(const PolynomialRing& ring);
    // Degree then reverse lexicographic (the usual fast default).
    static MatrixMonomialOrder degrevlex(const PolynomialRing& ring);

    const PolynomialRing& ring() const { return ring_; }
    const std::vector<std::vector<long>>& weights() const { return rows_; }

    Cmp compare(const ExponentVector& a, const ExponentVector& b) const;
    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == Cmp::Less;
    }
    bool greater(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == Cmp::Greater;
    }

    // Total degree dominates (first weight row is a positive constant vector),
    // as required by the cohomology rewriting.
    bool is_degree_modified() const;

    // True if the matrix makes every monomial involving an eliminated variable
    // larger than every monomial supported on `keep` (block structure check).
    bool eliminates_complement_of(const std::vector<int>& keep_indices) const;

private:
    PolynomialRing ring_;
    std::vector<std::vector<long>> rows_;
};

} // namespace repvar

#endif
