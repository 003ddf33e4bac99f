#include "repvar/monodromy.hpp"

#include <cmath>

namespace repvar {

namespace {
constexpr double kPi = 3.14159265358979323846;

double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

std::complex<double> eval_unipoly(const UniPoly& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + to_double(p.coeff(i));
    return acc;
}

std::complex<double> eval_ratfunc(const RatFunc& f, std::complex<double> x) {
    return eval_unipoly(f.num(), x) / eval_unipoly(f.den(), x);
}

// exp(2*pi*i*lambda) for rational lambda with denominator 1 or 2.
Rat exp_two_pi_i(const Rat& lambda) {
    if (is_integer(lambda)) return Rat(1);
    if (is_integer(lambda * 2)) return Rat(-1);
    throw Error("exp(2*pi*i*" + rat_to_string(lambda) +
                ") is not a rational unit; only integer and half-integer "
                "exponents are supported");
}

// A deterministic eigenvector of a 2x2 rational matrix for eigenvalue lambda,
// normalized so its first nonzero coordinate is 1.
std::array<Rat, 2> eigenvector(const MatQ& A, const Rat& lambda) {
    Rat a = A.at(0, 0) - lambda, b = A.at(0, 1);
    Rat c = A.at(1, 0), d = A.at(1, 1) - lambda;
    std::array<Rat, 2> v;
    if (b != 0) {
        v = {b, -a};
    } else if (a != 0) {
        v = {Rat(0), Rat(1)};
    } else if (c != 0) {
        v = {-d, c};
    } else {
        v = {Rat(1), Rat(0)};
    }
    if (v[0] != 0) {
        v[1] /= v[0];
        v[0] = 1;
    } else if (v[1] != 0) {
        v[1] = 1;
    }
    return v;
}
} // namespace

std::array<std::array<std::complex<double>, 2>, 2> ExactMonodromy::to_complex() const {
    std::array<std::array<std::complex<double>, 2>, 2> m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m[i][j] = std::complex<double>(to_double(rational_part.at(i, j)),
                                           kPi * to_double(pi_i_part.at(i, j)));
    return m;
}

Rat ExactMonodromy::det_rational() const {
    // det(A + C*pi*i) with the pi^2 and mixed terms: exact only when the
    // pi-degree-1 and degree-2 parts vanish; this holds for the monodromies
    // here (triangular pi parts).
    Rat a = rational_part.at(0, 0) * rational_part.at(1, 1) -
            rational_part.at(0, 1) * rational_part.at(1, 0);
    Rat mixed = rational_part.at(0, 0) * pi_i_part.at(1, 1) +
                pi_i_part.at(0, 0) * rational_part.at(1, 1) -
                rational_part.at(0, 1) * pi_i_part.at(1, 0) -
                pi_i_part.at(0, 1) * rational_part.at(1, 0);
    Rat pi2 = pi_i_part.at(0, 0) * pi_i_part.at(1, 1) - pi_i_part.at(0, 1) * pi_i_part.at(1, 0);
    if (mixed != 0 || pi2 != 0)
        throw Error("determinant is not rational (pi terms survive)");
    return a;
}

LocalSystemData build_local_system(const RationalFunctionMatrix& E2) {
    LocalSystemData out;
    MatQ a2 = residue(E2, Rat(2));
    MatQ am2 = residue(E2, Rat(-2));
    MatQ ainf = residue_at_infinity(E2, {Rat(2), Rat(-2)});
    out.residues["2"] = a2;
    out.residues["-2"] = am2;
    out.residues["inf"] = ainf;
    for (const auto& [name, m] : out.residues) {
        auto ev = eigenvalues_2x2(m);
        if (!ev) throw Error("irrational residue eigenvalues at " + name);
        out.eigenvalues[name] = *ev;
        Rat gap = ev->first - ev->second;
        out.resonant[name] = gap != 0 && is_integer(gap);
    }
    return out;
}

ExactMonodromy local_monodromy_nonresonant(const MatQ& A) {
    if (A.rows() != 2 || A.cols() != 2) throw DimensionMismatchError("expected 2x2 residue");
    auto ev = eigenvalues_2x2(A);
    if (!ev) throw Error("residue has irrational eigenvalues");
    Rat l1 = ev->first, l2 = ev->second;
    Rat gap = l1 - l2;
    if (gap != 0 && is_integer(gap))
        throw ResonanceError("eigenvalue difference " + rat_to_string(gap) +
                             " is a nonzero integer; use the resonant path");
    ExactMonodromy out{MatQ(2, 2), MatQ(2, 2)};
    if (l1 != l2) {
        Rat u1 = exp_two_pi_i(l1), u2 = exp_two_pi_i(l2);
        auto v1 = eigenvector(A, l1);
        auto v2 = eigenvector(A, l2);
        Rat detv = v1[0] * v2[1] - v2[0] * v1[1];
        if (detv == 0) throw InternalConsistencyError("eigenvectors are dependent");
        // N = V diag(u1,u2) V^{-1}
        MatQ V(2, 2), D(2, 2), Vi(2, 2);
        V.at(0, 0) = v1[0];
        V.at(1, 0) = v1[1];
        V.at(0, 1) = v2[0];
        V.at(1, 1) = v2[1];
        D.at(0, 0) = u1;
        D.at(1, 1) = u2;
        Vi.at(0, 0) = v2[1] / detv;
        Vi.at(0, 1) = -v2[0] / detv;
        Vi.at(1, 0) = -v1[1] / detv;
        Vi.at(1, 1) = v1[0] / detv;
        out.rational_part = V * D * Vi;
        return out;
    }
    // A = lambda I + Nil, exp(2 pi i A) = u (I + 2 pi i Nil)
    Rat u = exp_two_pi_i(l1);
    MatQ nil = A;
    nil.at(0, 0) -= l1;
    nil.at(1, 1) -= l1;
    out.rational_part = MatQ::identity(2) * u;
    out.pi_i_part = nil * (u * 2);
    return out;
}

InfinityMonodromy monodromy_resonant_infinity(const RationalFunctionMatrix& E2) {
    if (E2.rows() != 2 || E2.cols() != 2) throw DimensionMismatchError("expected the 2x2 subsystem");
    MatQ a2 = residue(E2, Rat(2));
    MatQ am2 = residue(E2, Rat(-2));
    // After t = 1/z: connection matrix A(z)/z with
    // A(z) = -(A2/(1-2z) + A_{-2}/(1+2z)). Taylor data at z = 0:
    InfinityMonodromy out;
    out.a0 = (a2 + am2) * Rat(-1);
    out.a1 = am2 * Rat(2) - a2 * Rat(2);

    auto ev = eigenvalues_2x2(out.a0);
    if (!ev) throw UnexpectedSpectrumError("irrational eigenvalues at infinity");
    Rat hi = ev->first, lo = ev->second; // ev sorted with hi >= lo
    if (hi - lo != 1)
        throw UnexpectedSpectrumError("eigenvalue gap at infinity is " +
                                      rat_to_string(hi - lo) + ", expected 1");

    // Frame with A(0) lower triangular, larger eigenvalue first: second basis
    // vector is the lo-eigenvector.
    auto vlo = eigenvector(out.a0, lo);
    MatQ T(2, 2), Ti(2, 2);
    if (vlo[1] != 0) { // e1 completes the basis
        T.at(0, 0) = 1;
        T.at(0, 1) = vlo[0];
        T.at(1, 1) = vlo[1];
    } else {
        T.at(1, 0) = 1;
        T.at(0, 1) = vlo[0];
    }
    Rat detT = T.at(0, 0) * T.at(1, 1) - T.at(0, 1) * T.at(1, 0);
    Ti.at(0, 0) = T.at(1, 1) / detT;
    Ti.at(0, 1) = -T.at(0, 1) / detT;
    Ti.at(1, 0) = -T.at(1, 0) / detT;
    Ti.at(1, 1) = T.at(0, 0) / detT;
    out.frame = T;

    MatQ a0t = Ti * out.a0 * T;
    MatQ a1t = Ti * out.a1 * T;
    if (a0t.at(0, 1) != 0)
        throw InternalConsistencyError("frame did not lower-triangularize A(0)");

    // One shearing step S = diag(1, z): raises the lower eigenvalue by one and
    // moves A1's upper-right entry into the residue.
    out.phi = MatQ(2, 2);
    out.phi.at(0, 0) = a0t.at(0, 0);
    out.phi.at(0, 1) = a1t.at(0, 1);
    out.phi.at(1, 1) = a0t.at(1, 1) + 1;
    // phi now has the doubled eigenvalue hi; N = e^{-2 pi i phi}
    Rat u = exp_two_pi_i(-hi); // e^{-2 pi i hi}
    MatQ nil = out.phi;
    nil.at(0, 0) -= hi;
    nil.at(1, 1) -= hi;
    out.n.rational_part = MatQ::identity(2) * u;
    out.n.pi_i_part = nil * (u * -2);
    return out;
}

// ---------------- numeric oracle ----------------

namespace {
CMat2 zero2() { return {{{0.0, 0.0}, {0.0, 0.0}}}; }

CMat2 identity2() {
    CMat2 m = zero2();
    m[0][0] = 1.0;
    m[1][1] = 1.0;
    return m;
}

CMat2 add(const CMat2& a, const CMat2& b, std::complex<double> scale = 1.0) {
    CMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a[i][j] + scale * b[i][j];
    return m;
}

struct Path {
    // s in [0,1] -> (t, dt/ds)
    std::function<std::pair<std::complex<double>, std::complex<double>>(double)> at;
};

CMat2 rhs(const std::array<std::array<RatFunc, 2>, 2>& E, const Path& path, double s,
          const CMat2& V) {
    auto [t, dt] = path.at(s);
    CMat2 Et;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Et[i][j] = eval_ratfunc(E[i][j], t);
    CMat2 out = zero2();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) out[i][j] += -Et[i][k] * dt * V[k][j];
    return out;
}

CMat2 rk4_transfer(const std::array<std::array<RatFunc, 2>, 2>& E, const Path& path,
                   std::size_t steps) {
    CMat2 V = identity2();
    double h = 1.0 / static_cast<double>(steps);
    for (std::size_t n = 0; n < steps; ++n) {
        double s = static_cast<double>(n) * h;
        CMat2 k1 = rhs(E, path, s, V);
        CMat2 k2 = rhs(E, path, s + h / 2, add(V, k1, h / 2));
        CMat2 k3 = rhs(E, path, s + h / 2, add(V, k2, h / 2));
        CMat2 k4 = rhs(E, path, s + h, add(V, k3, h));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                V[i][j] += h / 6.0 * (k1[i][j] + 2.0 * k2[i][j] + 2.0 * k3[i][j] + k4[i][j]);
    }
    return V;
}

double max_abs_diff(const CMat2& a, const CMat2& b) {
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

std::array<std::array<RatFunc, 2>, 2> entries_of(const RationalFunctionMatrix& E2) {
    return {{{E2.at(0, 0), E2.at(0, 1)}, {E2.at(1, 0), E2.at(1, 1)}}};
}

Path circle_path(std::complex<double> center, double radius, double start_angle) {
    return {[=](double s) {
        double ang = start_angle + 2 * kPi * s;
        std::complex<double> e(std::cos(ang), std::sin(ang));
        std::complex<double> t = center + radius * e;
        std::complex<double> dt = std::complex<double>(0, 1) * radius * 2.0 * kPi * e;
        return std::make_pair(t, dt);
    }};
}

Path segment_path(std::complex<double> a, std::complex<double> b) {
    return {[=](double s) { return std::make_pair(a + (b - a) * s, b - a); }};
}

// Transfer with step doubling until the estimate passes tolerance.
std::pair<CMat2, double> transfer_adaptive(const std::array<std::array<RatFunc, 2>, 2>& E,
                                           const Path& path, std::size_t& steps,
                                           double tolerance) {
    CMat2 coarse = rk4_transfer(E, path, steps);
    for (int iter = 0; iter < 6; ++iter) {
        CMat2 fine = rk4_transfer(E, path, steps * 2);
        double err = max_abs_diff(coarse, fine);
        steps *= 2;
        if (err < tolerance) return {fine, err};
        coarse = fine;
    }
    throw NonConvergenceError("step-halving estimates did not converge below tolerance");
}
} // namespace

std::complex<double> trace(const CMat2& m) { return m[0][0] + m[1][1]; }

std::complex<double> det(const CMat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

CMat2 matmul(const CMat2& a, const CMat2& b) {
    CMat2 m = zero2();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

CMat2 matinv(const CMat2& a) {
    std::complex<double> d = det(a);
    CMat2 m;
    m[0][0] = a[1][1] / d;
    m[0][1] = -a[0][1] / d;
    m[1][0] = -a[1][0] / d;
    m[1][1] = a[0][0] / d;
    return m;
}

NumericHolonomy monodromy_numeric(const RationalFunctionMatrix& E2, std::complex<double> center,
                                  double radius, std::size_t steps, double tolerance) {
    if (steps < 256) throw Error("monodromy_numeric requires steps >= 256");
    for (double p : {2.0, -2.0}) {
        double dist = std::abs(std::abs(center - std::complex<double>(p, 0)) - radius);
        if (dist < radius / 10.0)
            throw PoleProximityError("integration circle passes too close to t = " +
                                     std::to_string(p));
    }
    auto E = entries_of(E2);
    std::size_t used = steps;
    auto [m, err] = transfer_adaptive(E, circle_path(center, radius, 0.0), used, tolerance);
    return {m, err, used};
}

LoopProductCheck loop_product_check(const RationalFunctionMatrix& E2, double radius,
                                    std::size_t steps) {
    auto E = entries_of(E2);
    const std::complex<double> base(0, 10);
    double tol = 1e-10;

    auto based_loop = [&](double p) {
        std::complex<double> start(p, radius);
        std::size_t s1 = steps, s2 = steps, s3 = steps;
        auto [in, e1] = transfer_adaptive(E, segment_path(base, start), s1, tol);
        auto [circ, e2] = transfer_adaptive(E, circle_path({p, 0}, radius, kPi / 2), s2, tol);
        auto [out, e3] = transfer_adaptive(E, segment_path(start, base), s3, tol);
        (void)e1;
        (void)e2;
        (void)e3;
        return matmul(out, matmul(circ, in));
    };

    LoopProductCheck out{};
    out.n_minus2 = based_loop(-2.0);
    out.n_2 = based_loop(2.0);
    std::size_t sb = steps;
    auto [big, eb] = transfer_adaptive(E, circle_path({0, 0}, 10.0, kPi / 2), sb, tol);
    (void)eb;
    out.n_inf = matinv(big);
    CMat2 prod = matmul(out.n_inf, matmul(out.n_2, out.n_minus2));
    out.product_deviation = max_abs_diff(prod, identity2());
    return out;
}

} // namespace repvar
