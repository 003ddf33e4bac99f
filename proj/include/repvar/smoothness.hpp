#ifndef REPVAR_SMOOTHNESS_HPP
#define REPVAR_SMOOTHNESS_HPP

#include "repvar/varieties.hpp"

namespace repvar {

struct JacobianIdealResult {
    Ideal ideal; // original generators plus all c x c minors
    int codim = 0;
    int minor_count = 0;
};

// Jacobian ideal J(I) = I + (c x c minors of [d_j phi_i]). Columns default to
// all ring variables; pass `wrt` to differentiate along a subset (the fiber
// convention for families with base coordinates adjoined).
JacobianIdealResult jacobian_ideal(const Ideal& ideal, int codim,
                                   const std::optional<std::vector<std::string>>& wrt = std::nullopt);

// Smoothness of the fiber at exact parameter values: the reduced Groebner
// basis of the fiber's Jacobian ideal is {1}.
bool is_smooth_fiber(Surface s, const std::vector<Rat>& b);

struct SingularLocusOptions {
    long budget_seconds = 0; // 0 = no limit
    std::function<void(const ComputationStats&)> progress;
    int threads = 1;
};

// The primitive generator of (Jacobian ideal with symbolic parameters)
// intersected with the parameter subring, computed with the per-surface
// weight matrix. May throw BudgetExceededError for sigma04/sigma12.
Polynomial singular_locus(Surface s, const SingularLocusOptions& opts = {});

struct SliceResult {
    Polynomial slice; // univariate in b1 (primitive, positive leading coeff)
    bool degenerate = false;
};

// Desk-scale oracle for sigma04: fix b2,b3,b4, keep b1 symbolic, eliminate the
// x block. The square-free part of the slice matches psi4's specialization.
SliceResult singular_locus_slice(const std::vector<Rat>& fixed_b234,
                                 const SingularLocusOptions& opts = {});

// Same construction for sigma12 with b2 fixed (used when the full 8-variable
// elimination does not fit the budget).
SliceResult singular_locus_slice_sigma12(const Rat& fixed_b2,
                                         const SingularLocusOptions& opts = {});

// Paper weight matrices, exposed for tests: 4x4 on {x3,x2,x1,b},
// 7x7 on {x3,x2,x1,b4,b3,b2,b1}, 8x8 on {x23,x13,x12,x3,x2,x1,b2,b1}.
MatrixMonomialOrder paper_order_sigma11();
MatrixMonomialOrder paper_order_sigma04();
MatrixMonomialOrder paper_order_sigma12();

// Degree-lex order on the x block alone (for fixed-parameter fibers).
MatrixMonomialOrder x_block_order(Surface s);

// Square-free part of a polynomial supported on one variable.
UniPoly square_free_part(const UniPoly& p);
UniPoly poly_to_unipoly(const Polynomial& p, const std::string& var);

} // namespace repvar

#endif
