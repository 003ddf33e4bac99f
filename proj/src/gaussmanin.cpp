#include "repvar/gaussmanin.hpp"

#include <algorithm>

namespace repvar {

namespace {
constexpr IndexMask kDx12 = 0b011, kDx13 = 0b101, kDx23 = 0b110, kDx123 = 0b111;
const char* kBaseVar = "t";

Scalar tsym() { return Scalar(RatFunc::variable(kBaseVar)); }

ExponentVector exps(int a1, int a2, int a3) {
    ExponentVector e = ExponentVector::zero(3);
    e.set(0, a1);
    e.set(1, a2);
    e.set(2, a3);
    return e;
}
} // namespace

PolynomialRing gm_ring() {
    return PolynomialRing({"x1", "x2", "x3"}, CoeffField::rational_function(kBaseVar));
}

Polynomial gm_fiber_polynomial() {
    PolynomialRing R = gm_ring();
    Polynomial trace = poly_parse("-2 + x1^2 + x2^2 - x1*x2*x3 + x3^2", R);
    return trace - Polynomial::constant(R, tsym());
}

DifferentialForm gm_dt() {
    PolynomialRing R = gm_ring();
    Polynomial trace = poly_parse("-2 + x1^2 + x2^2 - x1*x2*x3 + x3^2", R);
    DifferentialForm out(R, 1);
    for (int i = 0; i < 3; ++i) {
        Polynomial d = trace.partial_derivative(R.variable(i));
        out = out + DifferentialForm::monomial_form(d, static_cast<IndexMask>(IndexMask(1) << i));
    }
    return out;
}

EtaForm eta_paper() {
    PolynomialRing R = gm_ring();
    RatFunc t = RatFunc::variable(kBaseVar);
    RatFunc den = (RatFunc(Rat(2), kBaseVar) * (t * t - RatFunc(Rat(4), kBaseVar))).inverse();
    // (t-2) x1 dx23
    Polynomial a = Polynomial::monomial(R, exps(1, 0, 0), Scalar(t - RatFunc(Rat(2), kBaseVar)));
    // x3 (x3^2 - 4) dx12
    Polynomial cpoly = poly_parse("x3^3 - 4*x3", R);
    // (2 x1 x3 + 2 x2 - t x2 - x2 x3^2) dx13
    Polynomial b = Polynomial::monomial(R, exps(1, 0, 1), Scalar(Rat(2))) +
                   Polynomial::monomial(R, exps(0, 1, 0), Scalar(RatFunc(Rat(2), kBaseVar) - t)) +
                   Polynomial::monomial(R, exps(0, 1, 2), Scalar(Rat(-1)));
    DifferentialForm form = DifferentialForm::monomial_form(a, kDx23) +
                            DifferentialForm::monomial_form(b, kDx13) +
                            DifferentialForm::monomial_form(cpoly, kDx12);
    return {form * Scalar(den)};
}

EtaForm eta_factorization() {
    // Lift psi1(t(x)) = t(x)^2 - 4 through (d1 t, d2 t, d3 t) over Q[x].
    PolynomialRing RQ({"x1", "x2", "x3"});
    Polynomial trace = poly_parse("-2 + x1^2 + x2^2 - x1*x2*x3 + x3^2", RQ);
    Polynomial target = trace * trace - Polynomial::constant(RQ, Scalar(4));
    std::vector<Polynomial> partials = {trace.partial_derivative("x1"),
                                        trace.partial_derivative("x2"),
                                        trace.partial_derivative("x3")};
    auto lift = lift_membership(target, partials, MatrixMonomialOrder::deglex(RQ));
    if (!lift)
        throw InternalConsistencyError("psi1(t(x)) failed to lift through the partials");
    // Exactness check of the lift itself.
    Polynomial check = Polynomial::zero(RQ);
    for (int i = 0; i < 3; ++i) check = check + (*lift)[(std::size_t)i] * partials[(std::size_t)i];
    if (check != target) throw InternalConsistencyError("lift identity failed");

    // eta = (q1 dx23 - q2 dx13 + q3 dx12) / psi1(t), with t(x) = t on the fiber.
    PolynomialRing R = gm_ring();
    RatFunc t = RatFunc::variable(kBaseVar);
    RatFunc inv_psi = (t * t - RatFunc(Rat(4), kBaseVar)).inverse();
    DifferentialForm form = DifferentialForm::monomial_form((*lift)[0].map_to(R), kDx23) +
                            DifferentialForm::monomial_form(-(*lift)[1].map_to(R), kDx13) +
                            DifferentialForm::monomial_form((*lift)[2].map_to(R), kDx12);
    return {form * Scalar(inv_psi)};
}

bool eta_identity_holds(const EtaForm& eta) {
    PolynomialRing R = gm_ring();
    DifferentialForm w = wedge(eta.form, gm_dt());
    Polynomial c = w.is_zero() ? Polynomial::zero(R) : w.component(kDx123);
    Polynomial diff = c - Polynomial::one(R);
    if (diff.is_zero()) return true;
    // reduce modulo the principal fiber ideal (a single polynomial is its own
    // Groebner basis)
    Polynomial f = gm_fiber_polynomial();
    DivisionResult dr = divide(diff, {f}, MatrixMonomialOrder::deglex(R));
    return dr.remainder.is_zero();
}

std::vector<RatFunc> reduce_eta_product(const EtaForm& eta, const Polynomial& c) {
    PolynomialRing R = gm_ring();
    Polynomial f = gm_fiber_polynomial();
    DifferentialForm w = eta.form * c;
    DifferentialForm dw = exterior_d(w);
    ReduceTopResult rr = reduce_top(f, dw);
    // coordinates against q(dB) = {1, 2x1, x2, x3, 3x1^2} dx123
    std::vector<RatFunc> coords;
    coords.reserve(5);
    const std::array<std::pair<ExponentVector, long>, 5> canon = {
        std::make_pair(exps(0, 0, 0), 1L), std::make_pair(exps(1, 0, 0), 2L),
        std::make_pair(exps(0, 1, 0), 1L), std::make_pair(exps(0, 0, 1), 1L),
        std::make_pair(exps(2, 0, 0), 3L)};
    for (const auto& [mono, scale] : canon) {
        Scalar coeff = rr.canonical.coeff_of(mono);
        coords.push_back(coeff.as_ratfunc(kBaseVar) / RatFunc(Rat(scale), kBaseVar));
    }
    return coords;
}

RationalFunctionMatrix connection_matrix(const EtaForm& eta) {
    if (!eta_identity_holds(eta))
        throw InternalConsistencyError("eta ^ dt != dx123 on the fibers");
    PolynomialRing R = gm_ring();
    // dB coefficients: d(m_j * x1 dx23) = c_j dx123
    std::vector<Polynomial> dB = {
        Polynomial::one(R),
        Polynomial::monomial(R, exps(1, 0, 0), Scalar(Rat(2))),
        Polynomial::monomial(R, exps(0, 1, 0), Scalar(1)),
        Polynomial::monomial(R, exps(0, 0, 1), Scalar(1)),
        Polynomial::monomial(R, exps(2, 0, 0), Scalar(Rat(3)))};
    RationalFunctionMatrix E(5, 5, kBaseVar);
    for (std::size_t j = 0; j < dB.size(); ++j) {
        std::vector<RatFunc> row = reduce_eta_product(eta, dB[j]);
        for (std::size_t k = 0; k < 5; ++k) E.at(j, k) = row[k];
    }
    return E;
}

RationalFunctionMatrix connection_matrix() { return connection_matrix(eta_paper()); }

// ---------------- partial fractions ----------------

PartialFractions partial_fractions(const RatFunc& r, const std::vector<Rat>& poles) {
    const std::string var = r.var();
    PartialFractions out;
    auto [q, rem] = r.num().divrem(r.den());
    out.poly_part = q;
    UniPoly num = rem;
    UniPoly den = r.den();

    std::vector<Rat> pts = poles;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    for (const Rat& p : pts) {
        UniPoly lin(var, {-p, Rat(1)});
        // multiplicity of p in den
        int m = 0;
        UniPoly d = den;
        while (!d.is_zero()) {
            auto [dq, dr] = d.divrem(lin);
            if (!dr.is_zero()) break;
            ++m;
            d = dq;
        }
        for (int j = m; j >= 1 && !num.is_zero(); --j) {
            // den = (x-p)^j * rest
            UniPoly rest = den;
            for (int k = 0; k < j; ++k) rest = rest.divrem(lin).first;
            Rat c = num.eval(p) / rest.eval(p);
            if (c != 0) out.poles.push_back({p, j, c});
            // num/den - c/(x-p)^j = (num - c*rest) / den, divisible by (x-p)
            num = num - rest * c;
            auto [nq, nr] = num.divrem(lin);
            if (!nr.is_zero())
                throw InternalConsistencyError("partial fraction peel left a remainder");
            num = nq;
            den = den.divrem(lin).first;
        }
    }
    if (!num.is_zero())
        throw UnsplitDenominatorError("denominator does not split over the given poles: " +
                                      den.to_string() + " remains");
    return out;
}

RatFunc reassemble(const PartialFractions& pf, const std::string& var) {
    RatFunc acc(pf.poly_part);
    for (const auto& p : pf.poles) {
        UniPoly lin(var, {-p.at, Rat(1)});
        RatFunc term(UniPoly::constant(var, p.coeff), lin.pow(static_cast<unsigned>(p.order)));
        acc = acc + term;
    }
    return acc;
}

MatQ residue(const RationalFunctionMatrix& E, const Rat& p) {
    MatQ out(E.rows(), E.cols());
    for (std::size_t i = 0; i < E.rows(); ++i)
        for (std::size_t j = 0; j < E.cols(); ++j) {
            const RatFunc& e = E.at(i, j);
            UniPoly lin(e.var(), {-p, Rat(1)});
            int m = 0;
            UniPoly rest = e.den();
            while (true) {
                auto [dq, dr] = rest.divrem(lin);
                if (!dr.is_zero()) break;
                ++m;
                rest = dq;
            }
            if (m == 0) continue;
            if (m > 1)
                throw HigherOrderPoleError("entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") has a pole of order " +
                                           std::to_string(m) + " at " + rat_to_string(p));
            out.at(i, j) = e.num().eval(p) / rest.eval(p);
        }
    return out;
}

MatQ residue_at_infinity(const RationalFunctionMatrix& E, const std::vector<Rat>& finite_poles) {
    MatQ sum(E.rows(), E.cols());
    for (const Rat& p : finite_poles) sum = sum + residue(E, p);
    return sum * Rat(-1);
}

RationalFunctionMatrix rank2_subsystem(const RationalFunctionMatrix& E) {
    if (E.rows() != 5 || E.cols() != 5) throw DimensionMismatchError("expected the 5x5 matrix");
    const std::array<std::size_t, 2> idx = {0, 4};
    RationalFunctionMatrix out(2, 2, E.at(0, 0).var());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out.at(i, j) = E.at(idx[i], idx[j]);
    return out;
}

bool has_direct_sum_block_structure(const RationalFunctionMatrix& E) {
    if (E.rows() != 5 || E.cols() != 5) return false;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            bool diagonal_block = (i == j) || ((i == 0 || i == 4) && (j == 0 || j == 4));
            if (!diagonal_block && !E.at(i, j).is_zero()) return false;
        }
    return true;
}

} // namespace repvar
