#ifndef REPVAR_VARIETIES_HPP
#define REPVAR_VARIETIES_HPP

#include <optional>

#include "repvar/groebner.hpp"

namespace repvar {

enum class Surface { Sigma11, Sigma04, Sigma12 };

Surface surface_from_string(const std::string& tag);
std::string surface_to_string(Surface s);

// Trace-coordinate presentation of the representation variety.
struct SurfacePresentation {
    Surface surface;
    PolynomialRing ambient_ring;            // fiber coordinates plus boundary traces
    std::vector<Polynomial> relations;      // {} / {u4} / {u2, us}
    std::vector<std::string> parameters;    // parameter names (b, b1..b4, b1..b2)
    std::vector<Polynomial> boundary_traces;
};

SurfacePresentation presentation(Surface s);

struct SingularLocusPolynomial {
    Surface surface;
    PolynomialRing param_ring;
    Polynomial psi;
    std::optional<Polynomial> delta; // sigma04 only
};

// The documented singular-locus polynomials. Delta is the symmetrized form
// (invariant under all permutations of the parameters).
SingularLocusPolynomial singular_locus_polynomial(Surface s);

// A parameter entry: an exact rational or symbolic (the parameter is then
// adjoined to the ring as a variable).
using ParamValue = std::optional<Rat>;

// Fiber ideal of the family at the given parameters. sigma11/sigma04 yield a
// principal ideal over the fiber coordinates; sigma12 yields the 4-generator
// ambient ideal. Symbolic entries adjoin their parameter as a ring variable.
Ideal fiber_ideal(Surface s, const std::vector<ParamValue>& params);

// sigma12 variant over the six fiber coordinates with t1, t2 substituted;
// two generators, codimension 2.
Ideal reduced_fiber_ideal_sigma12(const std::vector<ParamValue>& params);

Rat psi_eval(Surface s, const std::vector<Rat>& params);

// The trace relation of the free group F3 (section ring z1,z2,z3,z12,z13,z23,z123);
// exposed so tests can check the sigma04 presentation is this relation renamed.
Polynomial f3_trace_relation();

} // namespace repvar

#endif
