#include "repvar/varieties.hpp"

#include <array>

namespace repvar {

Surface surface_from_string(const std::string& tag) {
    if (tag == "sigma11") return Surface::Sigma11;
    if (tag == "sigma04") return Surface::Sigma04;
    if (tag == "sigma12") return Surface::Sigma12;
    throw UnknownSurfaceError("unknown surface: " + tag);
}

std::string surface_to_string(Surface s) {
    switch (s) {
        case Surface::Sigma11: return "sigma11";
        case Surface::Sigma04: return "sigma04";
        case Surface::Sigma12: return "sigma12";
    }
    throw UnknownSurfaceError("bad surface tag");
}

namespace {
const char* kTraceSigma11 = "-2 + x1^2 + x2^2 - x1*x2*x3 + x3^2";

const char* kU4 =
    "4 - t1^2 - t2^2 - t3^2 - t1*t2*t3*t4 - t4^2 + t1*t2*x1 + t3*t4*x1 - x1^2 "
    "+ t1*t3*x2 + t2*t4*x2 - x2^2 + t2*t3*x3 + t1*t4*x3 - x1*x2*x3 - x3^2";

const char* kU2 =
    "4 - x1^2 - x2^2 - x3^2 - x1*x2*x3*t1 - t1^2 + x1*x2*x12 + x3*t1*x12 - x12^2 "
    "+ x1*x3*x13 + x2*t1*x13 - x13^2 + x2*x3*x23 + x1*t1*x23 - x12*x13*x23 - x23^2";

const char* kUs = "t1 + t2 - x3*x12 - x2*x13 - x1*x23 + x1*x2*x3";

const char* kF3Relation =
    "4 - z1^2 - z2^2 - z3^2 - z1*z2*z3*z123 - z123^2 + z1*z2*z12 + z3*z123*z12 - z12^2 "
    "+ z1*z3*z13 + z2*z123*z13 - z13^2 + z2*z3*z23 + z1*z123*z23 - z12*z13*z23 - z23^2";
} // namespace

SurfacePresentation presentation(Surface s) {
    switch (s) {
        case Surface::Sigma11: {
            PolynomialRing R({"x1", "x2", "x3"});
            return {s, R, {}, {"b"}, {poly_parse(kTraceSigma11, R)}};
        }
        case Surface::Sigma04: {
            PolynomialRing R({"x1", "x2", "x3", "t1", "t2", "t3", "t4"});
            std::vector<Polynomial> traces;
            for (const char* t : {"t1", "t2", "t3", "t4"})
                traces.push_back(Polynomial::variable(R, t));
            return {s, R, {poly_parse(kU4, R)}, {"b1", "b2", "b3", "b4"}, traces};
        }
        case Surface::Sigma12: {
            PolynomialRing R({"x1", "x2", "x3", "x12", "x13", "x23", "t1", "t2"});
            std::vector<Polynomial> traces = {Polynomial::variable(R, "t1"),
                                              Polynomial::variable(R, "t2")};
            return {s, R, {poly_parse(kU2, R), poly_parse(kUs, R)}, {"b1", "b2"}, traces};
        }
    }
    throw UnknownSurfaceError("bad surface tag");
}

Polynomial f3_trace_relation() {
    PolynomialRing R({"z1", "z2", "z3", "z12", "z13", "z23", "z123"});
    return poly_parse(kF3Relation, R);
}

namespace {
Polynomial delta_sigma04(const PolynomialRing& Y) {
    // Symmetrized: sum yi^4 - 2 sum_{i<j} yi^2 yj^2 + 8 y1y2y3y4
    //              + sum_{i<j<k} yi^2 yj^2 yk^2 - y1y2y3y4 * sum yi^2
    std::array<Polynomial, 4> y = {
        Polynomial::variable(Y, "b1"), Polynomial::variable(Y, "b2"),
        Polynomial::variable(Y, "b3"), Polynomial::variable(Y, "b4")};
    Polynomial d = Polynomial::zero(Y);
    for (int i = 0; i < 4; ++i) d = d + y[(std::size_t)i].pow(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            d = d - y[(std::size_t)i].pow(2) * y[(std::size_t)j].pow(2) * Scalar(2);
    Polynomial prod = y[0] * y[1] * y[2] * y[3];
    d = d + prod * Scalar(8);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                d = d + y[(std::size_t)i].pow(2) * y[(std::size_t)j].pow(2) * y[(std::size_t)k].pow(2);
    Polynomial sumsq = Polynomial::zero(Y);
    for (int i = 0; i < 4; ++i) sumsq = sumsq + y[(std::size_t)i].pow(2);
    d = d - prod * sumsq;
    return d;
}
} // namespace

SingularLocusPolynomial singular_locus_polynomial(Surface s) {
    switch (s) {
        case Surface::Sigma11: {
            PolynomialRing Y({"b"});
            return {s, Y, poly_parse("b^2 - 4", Y), std::nullopt};
        }
        case Surface::Sigma04: {
            PolynomialRing Y({"b1", "b2", "b3", "b4"});
            Polynomial delta = delta_sigma04(Y);
            Polynomial psi = delta * delta;
            for (const char* v : {"b1", "b2", "b3", "b4"}) {
                Polynomial q = Polynomial::variable(Y, v);
                psi = psi * (q * q - Polynomial::constant(Y, Scalar(4)));
            }
            return {s, Y, psi, delta};
        }
        case Surface::Sigma12: {
            PolynomialRing Y({"b1", "b2"});
            Polynomial b1 = Polynomial::variable(Y, "b1");
            Polynomial b2 = Polynomial::variable(Y, "b2");
            Polynomial four = Polynomial::constant(Y, Scalar(4));
            Polynomial psi = (b1 * b1 - four) * (b2 * b2 - four) * (b1 - b2) * (b1 - b2);
            return {s, Y, psi, std::nullopt};
        }
    }
    throw UnknownSurfaceError("bad surface tag");
}

namespace {
void check_arity(Surface s, std::size_t got) {
    std::size_t want = s == Surface::Sigma11 ? 1 : (s == Surface::Sigma04 ? 4 : 2);
    if (got != want)
        throw ArityMismatchError(surface_to_string(s) + " takes " + std::to_string(want) +
                                 " parameter(s), got " + std::to_string(got));
}

// Ring over the fiber variables plus one variable per symbolic parameter.
PolynomialRing ring_with_symbolics(const std::vector<std::string>& fiber_vars,
                                   const std::vector<std::string>& param_names,
                                   const std::vector<ParamValue>& params) {
    std::vector<std::string> vars = fiber_vars;
    for (std::size_t i = 0; i < params.size(); ++i)
        if (!params[i]) vars.push_back(param_names[i]);
    return PolynomialRing(vars);
}
} // namespace

Ideal fiber_ideal(Surface s, const std::vector<ParamValue>& params) {
    check_arity(s, params.size());
    switch (s) {
        case Surface::Sigma11: {
            PolynomialRing R = ring_with_symbolics({"x1", "x2", "x3"}, {"b"}, params);
            Polynomial t = poly_parse(kTraceSigma11, R);
            Polynomial b = params[0] ? Polynomial::constant(R, Scalar(*params[0]))
                                     : Polynomial::variable(R, "b");
            return Ideal(R, {t - b});
        }
        case Surface::Sigma04: {
            SurfacePresentation P = presentation(s);
            Polynomial u4 = P.relations[0];
            std::map<std::string, std::string> rename;
            const std::array<const char*, 4> ts = {"t1", "t2", "t3", "t4"};
            const std::array<const char*, 4> bs = {"b1", "b2", "b3", "b4"};
            for (std::size_t i = 0; i < 4; ++i) {
                if (params[i]) {
                    u4 = u4.substitute(ts[i], Scalar(*params[i]));
                } else {
                    rename[ts[i]] = bs[i];
                }
            }
            PolynomialRing R =
                ring_with_symbolics({"x1", "x2", "x3"}, {"b1", "b2", "b3", "b4"}, params);
            return Ideal(R, {u4.map_to(R, rename)});
        }
        case Surface::Sigma12: {
            SurfacePresentation P = presentation(s);
            const PolynomialRing& R = P.ambient_ring;
            for (const auto& p : params)
                if (!p)
                    throw ArityMismatchError(
                        "symbolic parameters for sigma12 use the reduced fiber ideal");
            Polynomial t1 = Polynomial::variable(R, "t1");
            Polynomial t2 = Polynomial::variable(R, "t2");
            return Ideal(R, {t1 - Polynomial::constant(R, Scalar(*params[0])),
                             t2 - Polynomial::constant(R, Scalar(*params[1])),
                             P.relations[0], P.relations[1]});
        }
    }
    throw UnknownSurfaceError("bad surface tag");
}

Ideal reduced_fiber_ideal_sigma12(const std::vector<ParamValue>& params) {
    check_arity(Surface::Sigma12, params.size());
    SurfacePresentation P = presentation(Surface::Sigma12);
    Polynomial u2 = P.relations[0], us = P.relations[1];
    std::map<std::string, std::string> rename;
    const std::array<const char*, 2> ts = {"t1", "t2"};
    const std::array<const char*, 2> bs = {"b1", "b2"};
    for (std::size_t i = 0; i < 2; ++i) {
        if (params[i]) {
            u2 = u2.substitute(ts[i], Scalar(*params[i]));
            us = us.substitute(ts[i], Scalar(*params[i]));
        } else {
            rename[ts[i]] = bs[i];
        }
    }
    PolynomialRing R = ring_with_symbolics({"x1", "x2", "x3", "x12", "x13", "x23"},
                                           {"b1", "b2"}, params);
    return Ideal(R, {u2.map_to(R, rename), us.map_to(R, rename)});
}

Rat psi_eval(Surface s, const std::vector<Rat>& params) {
    check_arity(s, params.size());
    SingularLocusPolynomial slp = singular_locus_polynomial(s);
    std::map<std::string, Scalar> pt;
    for (std::size_t i = 0; i < params.size(); ++i)
        pt[slp.param_ring.variable(static_cast<int>(i))] = Scalar(params[i]);
    return slp.psi.eval(pt).as_rational();
}

} // namespace repvar
