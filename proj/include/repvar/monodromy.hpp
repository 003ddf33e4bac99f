#ifndef REPVAR_MONODROMY_HPP
#define REPVAR_MONODROMY_HPP

#include <array>
#include <complex>
#include <map>

#include "repvar/gaussmanin.hpp"

namespace repvar {

// 2x2 matrix with entries a + c*(pi*i), a and c exact rationals. Sufficient
// for the monodromy representatives of this family (integer and half-integer
// residue spectra).
struct ExactMonodromy {
    MatQ rational_part; // a
    MatQ pi_i_part;     // c

    std::array<std::array<std::complex<double>, 2>, 2> to_complex() const;
    Rat det_rational() const; // valid when pi_i_part vanishes on the det terms
};

struct LocalSystemData {
    std::map<std::string, MatQ> residues;                 // "-2", "2", "inf"
    std::map<std::string, std::pair<Rat, Rat>> eigenvalues;
    std::map<std::string, bool> resonant; // true iff eigenvalue gap is a nonzero integer
};

// Residue/eigenvalue/resonance data of the rank-2 subsystem.
LocalSystemData build_local_system(const RationalFunctionMatrix& E2);

// exp(2*pi*i*A) by exact eigendecomposition; requires rational eigenvalues
// whose exponentials are +-1 (integers and half-integers). Raises
// ResonanceError when the eigenvalue gap is a nonzero integer.
ExactMonodromy local_monodromy_nonresonant(const MatQ& A);

struct InfinityMonodromy {
    MatQ a0;          // A(0) after the y -> 1/z change, equals A_infinity
    MatQ a1;          // dA/dz(0)
    MatQ frame;       // basis change T used for the shearing
    MatQ phi;         // sheared residue with non-resonant (equal) spectrum
    ExactMonodromy n; // e^{-2 pi i phi}
};

// Malgrange shearing at the resonant point at infinity (eigenvalue gap 1).
InfinityMonodromy monodromy_resonant_infinity(const RationalFunctionMatrix& E2);

using CMat2 = std::array<std::array<std::complex<double>, 2>, 2>;

struct NumericHolonomy {
    CMat2 matrix;
    double error_estimate = 0.0;
    std::size_t steps_used = 0;
};

// Holonomy of the counterclockwise circle |t - center| = radius from the
// identity frame, integrating v' = -E(t(s)) (dt/ds) v with classical RK4 and
// a step-doubling error estimate (steps doubled until the estimate passes
// tolerance).
NumericHolonomy monodromy_numeric(const RationalFunctionMatrix& E2, std::complex<double> center,
                                  double radius, std::size_t steps, double tolerance = 1e-9);

struct LoopProductCheck {
    CMat2 n_minus2, n_2, n_inf; // based at 10i; n_inf is the inverse big loop
    double product_deviation;   // max |(N_inf N_2 N_-2 - I)_ij|
};

// Based-loop factorization: small loops around -2 and 2 joined to the base
// point 10i, and the inverse of the big circle as the loop around infinity.
LoopProductCheck loop_product_check(const RationalFunctionMatrix& E2, double radius,
                                    std::size_t steps);

// Helpers for comparing numeric and exact data.
std::complex<double> trace(const CMat2& m);
std::complex<double> det(const CMat2& m);
CMat2 matmul(const CMat2& a, const CMat2& b);
CMat2 matinv(const CMat2& a);

} // namespace repvar

#endif
