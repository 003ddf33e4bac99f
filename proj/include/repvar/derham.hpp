#ifndef REPVAR_DERHAM_HPP
#define REPVAR_DERHAM_HPP

#include "repvar/forms.hpp"
#include "repvar/smoothness.hpp"

namespace repvar {

// One rewriting step: subtracting d(multiplier) from the working top form
// eliminated the monomial `lead_before`. The multiplier lies in f*Omega^2.
struct ReductionStep {
    std::string lemma; // L63 | L64 | Q2 | Q3
    DifferentialForm multiplier;
    DifferentialForm delta; // exterior_d(multiplier)
    ExponentVector lead_before;
};

struct ReductionCertificate {
    std::vector<ReductionStep> steps;
};

struct ReduceTopResult {
    Polynomial canonical; // supported on {1, x1, x2, x3, x1^2}
    ReductionCertificate certificate;
};

// Rewrite w ~ canonical * dx123 modulo d(f * Omega^2), recording a replayable
// certificate. f must be a cubic of the one-holed-torus shape (nonzero
// x1*x2*x3 term) over a 3-variable ring; symbolic parameters enter through
// the coefficient field. The optional order must be degree-modified and only
// changes tie-breaking, not the canonical support.
ReduceTopResult reduce_top(const Polynomial& f, const DifferentialForm& w,
                           const MatrixMonomialOrder* tie_break = nullptr);

// Exact replay: original == canonical*dx123 + sum d(u_i), every u_i in f*Omega^2,
// and the eliminated leading monomials strictly decrease. Returns false (and
// fills `why`) on any violation.
bool replay_certificate(const Polynomial& f, const DifferentialForm& original,
                        const Polynomial& canonical, const ReductionCertificate& cert,
                        std::string* why = nullptr);

struct CohomologyBasis {
    Surface surface;
    std::vector<ParamValue> params;
    std::vector<DifferentialForm> classes; // degree-2 representatives
    std::vector<std::string> labels;       // printable class monomials
    int dimension = 0;
};

struct IndependenceAudit {
    bool independent = false;
    std::size_t dim_candidates = 0;
    std::size_t dim_dspan = 0;
    std::size_t dim_sum = 0;
    std::size_t dim_intersection = 0;
    int used_bound = 0;
    bool bound_raised = false; // truncation boundary aliased; bound raised once
};

// Exact truncated linear algebra: does span{candidates} meet d(f * Omega^2)
// trivially? Candidates are top-degree monomial forms; exact coefficients.
IndependenceAudit independence_check(const Polynomial& f,
                                     const std::vector<DifferentialForm>& candidates,
                                     int degree_bound);

struct TopCohomology {
    CohomologyBasis basis;
    IndependenceAudit audit;
};

// Top de Rham cohomology basis of the smooth fiber (sigma11 or sigma04).
TopCohomology top_cohomology_basis(Surface s, const std::vector<Rat>& b, int degree_bound = 5);

struct SingularH2 {
    CohomologyBasis basis;
    GroebnerBasis quotient_gb;                 // basis of (f, df) under the paper order
    std::vector<ExponentVector> quotient_monomials; // standard monomials of the quotient
};

// H^2 of the two singular sigma11 fibers (b = -2 or 2) via Groebner normal
// forms in Omega^3 and a closedness kernel over the candidate classes.
SingularH2 singular_h2_basis(const Rat& b);

// The five basis class monomials m * x1 dx23 for m in {1, x1, x2, x3, x1^2},
// over the given 3-variable ring.
std::vector<DifferentialForm> standard_h2_classes(const PolynomialRing& R);
std::vector<std::string> standard_h2_labels();

} // namespace repvar

#endif
