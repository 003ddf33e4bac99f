#ifndef REPVAR_GAUSSMANIN_HPP
#define REPVAR_GAUSSMANIN_HPP

#include "repvar/derham.hpp"
#include "repvar/matrixq.hpp"

namespace repvar {

// Square matrix of univariate rational functions in the base parameter.
class RationalFunctionMatrix {
public:
    RationalFunctionMatrix() = default;
    RationalFunctionMatrix(std::size_t rows, std::size_t cols, const std::string& var)
        : r_(rows), c_(cols), e_(rows * cols, RatFunc(Rat(0), var)) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    RatFunc& at(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
    bool operator==(const RationalFunctionMatrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<RatFunc> e_;
};

struct EtaForm {
    DifferentialForm form; // 2-form over Q(t)[x1,x2,x3]
};

// The ring Q(t)[x1,x2,x3] used for the symbolic-parameter computations.
PolynomialRing gm_ring();
// The fiber polynomial t(x) - t over gm_ring().
Polynomial gm_fiber_polynomial();
// dt as a 1-form over gm_ring().
DifferentialForm gm_dt();

// The 2-form eta printed in the paper (denominator 2(t^2-4)).
EtaForm eta_paper();

// Constructs an eta with eta ^ dt = dx123 on the fibers by lifting
// psi1(t(x)) through the partial-derivative ideal and dividing by the unit.
EtaForm eta_factorization();

// Exact check of eta ^ dt = dx123 modulo the fiber ideal (t(x) - t).
bool eta_identity_holds(const EtaForm& eta);

// The 5x5 Gauss-Manin connection matrix E(t) in the basis
// {1, x1, x2, x3, x1^2} (x) x1 dx23; row j holds the coordinates of the
// derivative of basis class j.
RationalFunctionMatrix connection_matrix(const EtaForm& eta);
RationalFunctionMatrix connection_matrix();

// Reduction of c*eta to basis coordinates (the paper's intermediate goldens).
std::vector<RatFunc> reduce_eta_product(const EtaForm& eta, const Polynomial& c);

struct PartialFractionPole {
    Rat at;
    int order = 1;
    Rat coeff;
};

struct PartialFractions {
    UniPoly poly_part;
    std::vector<PartialFractionPole> poles; // sorted by (at, descending order)
};

// Exact partial fractions over the given points; the denominator must split
// over them (UnsplitDenominatorError otherwise). Reassembly is exact.
PartialFractions partial_fractions(const RatFunc& r, const std::vector<Rat>& poles);
RatFunc reassemble(const PartialFractions& pf, const std::string& var);

// Residue matrix: coefficients of 1/(t-p). Entries with higher-order poles at
// p raise HigherOrderPoleError.
MatQ residue(const RationalFunctionMatrix& E, const Rat& p);
// At infinity: minus the sum of the finite residues over the given poles.
MatQ residue_at_infinity(const RationalFunctionMatrix& E, const std::vector<Rat>& finite_poles);

// The rank-2 block of E on the (1, x1^2) coordinates (rows/cols 0 and 4).
RationalFunctionMatrix rank2_subsystem(const RationalFunctionMatrix& E);

// Zero/nonzero pattern check: three 1x1 blocks plus one 2x2 block on {0,4}.
bool has_direct_sum_block_structure(const RationalFunctionMatrix& E);

} // namespace repvar

#endif
