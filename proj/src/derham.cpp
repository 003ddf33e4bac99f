#include "repvar/derham.hpp"

#include <algorithm>

#include "repvar/matrixq.hpp"

namespace repvar {

namespace {
constexpr IndexMask kDx12 = 0b011, kDx13 = 0b101, kDx23 = 0b110, kDx123 = 0b111;

bool is_canonical_mono(const ExponentVector& a) {
    long d = a.total_degree();
    if (d == 0) return true;
    if (d == 1) return true;
    return d == 2 && a[0] == 2; // x1^2
}

MatrixMonomialOrder default_w3(const PolynomialRing& R) {
    return MatrixMonomialOrder(R, {{1, 1, 1}, {0, 0, 1}, {0, 1, 0}});
}

// Largest non-canonical monomial of c, if any.
std::optional<ExponentVector> max_noncanonical(const Polynomial& c,
                                               const MatrixMonomialOrder& order) {
    std::optional<ExponentVector> best;
    for (const auto& t : c.terms()) {
        if (is_canonical_mono(t.mono)) continue;
        if (!best || order.greater(t.mono, *best)) best = t.mono;
    }
    return best;
}

ExponentVector exps(int a1, int a2, int a3) {
    ExponentVector e = ExponentVector::zero(3);
    e.set(0, a1);
    e.set(1, a2);
    e.set(2, a3);
    return e;
}

struct Rule {
    DifferentialForm g; // u = f*g
    std::string tag;
};

// The exact 2-form schema of the rewriting lemmas for target monomial a.
Rule rule_for(const PolynomialRing& R, const ExponentVector& a) {
    int a1 = a[0], a2 = a[1], a3 = a[2];
    int npos = (a1 > 0) + (a2 > 0) + (a3 > 0);
    if (npos >= 2) {
        // one factor of each of the two chosen variables moves into dx_K
        if (a2 > 0 && a3 > 0) {
            return {DifferentialForm::monomial_form(
                        Polynomial::monomial(R, exps(a1, a2 - 1, a3 - 1), Scalar(1)), kDx23),
                    "L63"};
        }
        if (a1 > 0 && a3 > 0) {
            return {DifferentialForm::monomial_form(
                        Polynomial::monomial(R, exps(a1 - 1, a2, a3 - 1), Scalar(1)), kDx13),
                    "L63"};
        }
        return {DifferentialForm::monomial_form(
                    Polynomial::monomial(R, exps(a1 - 1, a2 - 1, a3), Scalar(1)), kDx12),
                "L63"};
    }
    // pure power x_i^m with m >= 2 (m == 2 only for i in {2,3})
    if (a1 >= 2) {
        int m = a1;
        DifferentialForm g =
            DifferentialForm::monomial_form(
                Polynomial::monomial(R, exps(m - 1, 0, 0), Scalar(2)), kDx23) +
            DifferentialForm::monomial_form(
                Polynomial::monomial(R, exps(m - 2, 1, 0), Scalar(m)), kDx13);
        return {g, "L64"};
    }
    if (a2 >= 2) {
        int m = a2;
        DifferentialForm g =
            DifferentialForm::monomial_form(
                Polynomial::monomial(R, exps(0, m - 1, 0), Scalar(-2)), kDx13) +
            DifferentialForm::monomial_form(
                Polynomial::monomial(R, exps(1, m - 2, 0), Scalar(-m)), kDx23);
        return {g, m == 2 ? "Q2" : "L64"};
    }
    if (a3 >= 2) {
        int m = a3;
        DifferentialForm g =
            DifferentialForm::monomial_form(
                Polynomial::monomial(R, exps(0, 0, m - 1), Scalar(2)), kDx12) +
            DifferentialForm::monomial_form(
                Polynomial::monomial(R, exps(0, 1, m - 2), Scalar(m)), kDx13);
        return {g, m == 2 ? "Q3" : "L64"};
    }
    throw InternalConsistencyError("no rewriting rule matches a canonical monomial");
}
} // namespace

std::vector<DifferentialForm> standard_h2_classes(const PolynomialRing& R) {
    Polynomial x1 = Polynomial::variable(R, "x1");
    Polynomial x2 = Polynomial::variable(R, "x2");
    Polynomial x3 = Polynomial::variable(R, "x3");
    std::vector<Polynomial> ms = {Polynomial::one(R), x1, x2, x3, x1 * x1};
    std::vector<DifferentialForm> out;
    out.reserve(5);
    for (const auto& m : ms)
        out.push_back(DifferentialForm::monomial_form(m * x1, kDx23));
    return out;
}

std::vector<std::string> standard_h2_labels() {
    return {"1*x1 dx{23}", "x1*x1 dx{23}", "x2*x1 dx{23}", "x3*x1 dx{23}", "x1^2*x1 dx{23}"};
}

ReduceTopResult reduce_top(const Polynomial& f, const DifferentialForm& w,
                           const MatrixMonomialOrder* tie_break) {
    const PolynomialRing& R = f.ring();
    if (R.nvars() != 3) throw NonPrincipalIdealError("reduce_top expects a 3-variable fiber ring");
    if (w.ring() != R) throw RingMismatchError("form over a different ring");
    if (!w.is_zero() && w.degree() != 3) throw Error("reduce_top expects a top-degree form");
    if (f.coeff_of(exps(1, 1, 1)).is_zero())
        throw Error("fiber polynomial lacks the x1*x2*x3 term; rewriting schema does not apply");
    MatrixMonomialOrder order = tie_break ? *tie_break : default_w3(R);
    if (tie_break) {
        if (order.ring() != R) throw RingMismatchError("tie-break order over a different ring");
        if (!order.is_degree_modified())
            throw Error("tie-break order must be degree-modified");
    }

    Polynomial c = w.is_zero() ? Polynomial::zero(R) : w.component(kDx123);
    ReductionCertificate cert;
    while (auto target = max_noncanonical(c, order)) {
        ExponentVector a = *target;
        Rule rule = rule_for(R, a);
        DifferentialForm u_acc(R, 2);
        DifferentialForm delta_acc(R, 3);

        auto apply = [&](const ExponentVector& tgt, const DifferentialForm& g) {
            DifferentialForm u0 = g * f;
            DifferentialForm w0 = exterior_d(u0);
            Scalar kappa = w0.component(kDx123).coeff_of(tgt);
            if (kappa.is_zero())
                throw InternalConsistencyError("rewriting rule failed to reach the target monomial");
            Scalar scale = c.coeff_of(tgt) / kappa;
            u_acc = u_acc + u0 * scale;
            DifferentialForm du = w0 * scale;
            delta_acc = delta_acc + du;
            c = c - du.component(kDx123);
        };

        apply(a, rule.g);
        // A pure-power step can surface same-degree monomials above the target;
        // fold their elimination into this step so the leading weight strictly
        // drops across steps.
        while (auto above = max_noncanonical(c, order)) {
            if (!order.greater(*above, a)) break;
            Rule clean = rule_for(R, *above);
            if (clean.tag != "L63")
                throw InternalConsistencyError("unexpected cleanup rule " + clean.tag);
            apply(*above, clean.g);
        }
        cert.steps.push_back({rule.tag, u_acc, delta_acc, a});
    }
    return {c, std::move(cert)};
}

bool replay_certificate(const Polynomial& f, const DifferentialForm& original,
                        const Polynomial& canonical, const ReductionCertificate& cert,
                        std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const PolynomialRing& R = f.ring();
    MatrixMonomialOrder order = default_w3(R);
    MatrixMonomialOrder dl = MatrixMonomialOrder::deglex(R);
    DifferentialForm sum(R, 3);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const ReductionStep& st = cert.steps[i];
        if (exterior_d(st.multiplier) != st.delta)
            return fail("step " + std::to_string(i) + ": delta != d(multiplier)");
        for (const auto& [k, comp] : st.multiplier.components()) {
            DivisionResult dr = divide(comp, {f}, dl);
            if (!dr.remainder.is_zero())
                return fail("step " + std::to_string(i) + ": multiplier not in f*Omega^2");
        }
        if (i > 0 && !order.greater(cert.steps[i - 1].lead_before, st.lead_before))
            return fail("step " + std::to_string(i) + ": leading weight did not strictly decrease");
        sum = sum + st.delta;
    }
    DifferentialForm reconstructed = p_iso(canonical) + sum;
    if (reconstructed != original) return fail("original != canonical*dx123 + sum of deltas");
    return true;
}

// ---------------- independence ----------------

namespace {
std::vector<ExponentVector> monomials_up_to(int deg) {
    std::vector<ExponentVector> out;
    for (int d = 0; d <= deg; ++d)
        for (int i = d; i >= 0; --i)
            for (int j = d - i; j >= 0; --j)
                out.push_back(exps(i, j, d - i - j));
    return out;
}

struct SpanRanks {
    std::size_t rM, rC, rMC;
};

SpanRanks span_ranks(const Polynomial& f, const std::vector<DifferentialForm>& candidates,
                     int bound) {
    const PolynomialRing& R = f.ring();
    std::vector<ExponentVector> rows = monomials_up_to(bound + 2);
    std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);

    std::vector<ExponentVector> gs = monomials_up_to(bound);
    std::vector<IndexMask> ks = {kDx12, kDx13, kDx23};
    MatQ M(rows.size(), gs.size() * ks.size());
    std::size_t col = 0;
    for (const auto& g : gs) {
        Polynomial fg = f * Polynomial::monomial(R, g, Scalar(1));
        for (IndexMask k : ks) {
            DifferentialForm d = exterior_d(DifferentialForm::monomial_form(fg, k));
            Polynomial top = d.is_zero() ? Polynomial::zero(R) : d.component(kDx123);
            for (const auto& t : top.terms()) {
                auto it = row_of.find(t.mono);
                if (it == row_of.end())
                    throw InternalConsistencyError("truncation row table too small");
                M.at(it->second, col) = t.coeff.as_rational();
            }
            ++col;
        }
    }
    MatQ C(rows.size(), candidates.size());
    for (std::size_t j = 0; j < candidates.size(); ++j) {
        Polynomial top = candidates[j].is_zero() ? Polynomial::zero(R)
                                                 : candidates[j].component(kDx123);
        for (const auto& t : top.terms()) {
            auto it = row_of.find(t.mono);
            if (it == row_of.end()) throw Error("candidate degree exceeds the truncation bound");
            C.at(it->second, j) = t.coeff.as_rational();
        }
    }
    return {M.rank(), C.rank(), M.augment_columns(C).rank()};
}
} // namespace

IndependenceAudit independence_check(const Polynomial& f,
                                     const std::vector<DifferentialForm>& candidates,
                                     int degree_bound) {
    long maxdeg = 0;
    for (const auto& c : candidates) {
        if (c.is_zero()) continue;
        if (c.degree() != 3) throw Error("independence candidates must be top-degree forms");
        maxdeg = std::max(maxdeg, c.component(kDx123).total_degree());
    }
    if (degree_bound < maxdeg + 1)
        throw Error("degree_bound must exceed the largest candidate degree");

    IndependenceAudit audit;
    audit.used_bound = degree_bound;
    SpanRanks r0 = span_ranks(f, candidates, degree_bound);
    SpanRanks r1 = span_ranks(f, candidates, degree_bound + 1);
    std::size_t i0 = r0.rM + r0.rC - r0.rMC;
    std::size_t i1 = r1.rM + r1.rC - r1.rMC;
    if (i0 != i1) {
        audit.bound_raised = true;
        audit.used_bound = degree_bound + 1;
        audit.dim_dspan = r1.rM;
        audit.dim_candidates = r1.rC;
        audit.dim_sum = r1.rMC;
        audit.dim_intersection = i1;
    } else {
        audit.dim_dspan = r0.rM;
        audit.dim_candidates = r0.rC;
        audit.dim_sum = r0.rMC;
        audit.dim_intersection = i0;
    }
    audit.independent = (audit.dim_intersection == 0);
    return audit;
}

// ---------------- smooth fibers ----------------

namespace {
Polynomial sigma11_trace(const PolynomialRing& R) {
    return poly_parse("-2 + x1^2 + x2^2 - x1*x2*x3 + x3^2", R);
}

std::vector<DifferentialForm> db_candidates(const PolynomialRing& R) {
    // d of the basis classes: {1, 2x1, x2, x3, 3x1^2} dx123 (scalings irrelevant
    // to independence; keep the plain monomials)
    std::vector<DifferentialForm> out;
    for (const auto& m : {exps(0, 0, 0), exps(1, 0, 0), exps(0, 1, 0), exps(0, 0, 1), exps(2, 0, 0)})
        out.push_back(DifferentialForm::monomial_form(Polynomial::monomial(R, m, Scalar(1)), kDx123));
    return out;
}

// Spanning evidence for the rewriting schema: all monomial top forms up to the
// cubic check reduce into the canonical support.
void verify_schema_spans(const Polynomial& f, int maxdeg) {
    const PolynomialRing& R = f.ring();
    for (const auto& m : monomials_up_to(maxdeg)) {
        DifferentialForm w =
            DifferentialForm::monomial_form(Polynomial::monomial(R, m, Scalar(1)), kDx123);
        ReduceTopResult rr = reduce_top(f, w);
        for (const auto& t : rr.canonical.terms())
            if (!is_canonical_mono(t.mono))
                throw InternalConsistencyError("reduction left a non-canonical monomial");
    }
}
} // namespace

TopCohomology top_cohomology_basis(Surface s, const std::vector<Rat>& b, int degree_bound) {
    if (s == Surface::Sigma12)
        throw NonPrincipalIdealError(
            "sigma12 fibers are codimension 2; the principal-ideal quotient does not apply");
    std::vector<ParamValue> pv;
    pv.reserve(b.size());
    for (const auto& x : b) pv.emplace_back(x);

    if (psi_eval(s, b) == 0)
        throw SingularFiberError("fiber is singular at the given parameters; "
                                 "use singular_h2_basis for the sigma11 fibers at b = ±2");

    Ideal fib = fiber_ideal(s, pv);
    Polynomial f = fib.generators[0];
    const PolynomialRing& R = f.ring();

    if (s == Surface::Sigma04) {
        std::vector<Rat> ref = {Rat(1), Rat(0), Rat(0), Rat(0)};
        if (b == ref) {
            // the coordinate-change route: u4(b) = -(t(-x) - 1) as ideals
            Polynomial t = sigma11_trace(R);
            Polynomial tneg = t;
            for (const char* v : {"x1", "x2", "x3"})
                tneg = tneg.substitute(v, -Polynomial::variable(R, v));
            if (f + (tneg - Polynomial::one(R)) != Polynomial::zero(R))
                throw InternalConsistencyError("fiber ideal differs from -(t(-x)-1)");
        }
    }

    TopCohomology out;
    out.basis.surface = s;
    out.basis.params = pv;
    try {
        verify_schema_spans(f, 3);
        out.basis.classes = standard_h2_classes(R);
        out.basis.labels = standard_h2_labels();
        out.audit = independence_check(f, db_candidates(R), degree_bound);
        if (!out.audit.independent)
            throw InternalConsistencyError("basis classes are not independent in the quotient");
        out.basis.dimension = 5;
        return out;
    } catch (const InternalConsistencyError&) {
        if (s != Surface::Sigma04) throw;
    }

    // Fallback for sigma04 fibers the schema does not cover: greedy exact
    // linear algebra over the truncated quotient, candidates of degree <= 2.
    std::vector<DifferentialForm> cands;
    for (const auto& m : monomials_up_to(2))
        cands.push_back(DifferentialForm::monomial_form(Polynomial::monomial(R, m, Scalar(1)), kDx123));
    std::vector<DifferentialForm> chosen;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        std::vector<DifferentialForm> trial = chosen;
        trial.push_back(cands[i]);
        IndependenceAudit a = independence_check(f, trial, degree_bound);
        if (a.independent) {
            chosen = trial;
            labels.push_back(cands[i].component(kDx123).to_string() + "*dx{123}");
        }
    }
    out.basis.classes = chosen;
    out.basis.labels = labels;
    out.basis.dimension = static_cast<int>(chosen.size());
    out.audit = independence_check(f, chosen, degree_bound);
    return out;
}

// ---------------- singular fibers ----------------

SingularH2 singular_h2_basis(const Rat& b) {
    if (b != 2 && b != -2)
        throw Error("singular_h2_basis is defined for b = -2 and b = 2 only");
    PolynomialRing R({"x1", "x2", "x3"});
    Polynomial t = sigma11_trace(R);
    Polynomial f = t - Polynomial::constant(R, Scalar(b));
    std::vector<Polynomial> gens = {f, t.partial_derivative("x1"), t.partial_derivative("x2"),
                                    t.partial_derivative("x3")};

    MatrixMonomialOrder W = x_block_order(Surface::Sigma11);
    const PolynomialRing& RW = W.ring();
    std::vector<Polynomial> gw;
    gw.reserve(gens.size());
    for (const auto& g : gens) gw.push_back(g.map_to(RW));
    GroebnerBasis gb = buchberger(Ideal(RW, gw), W);

    // standard monomials of the quotient (finite here)
    std::vector<ExponentVector> std_monos;
    constexpr int kDegreeCap = 50;
    for (int deg = 0; deg <= kDegreeCap; ++deg) {
        if (deg == kDegreeCap)
            throw InternalConsistencyError("quotient is not finite dimensional");
        bool any = false;
        for (const auto& m : monomials_up_to(deg)) {
            if (m.total_degree() != deg) continue;
            ExponentVector mw = ExponentVector::zero(3);
            // positions: R = [x1,x2,x3], RW = [x3,x2,x1]
            mw.set(0, m[2]);
            mw.set(1, m[1]);
            mw.set(2, m[0]);
            bool divisible = false;
            for (const auto& e : gb.elements())
                if (e.leading_term(W).mono.divides(mw)) {
                    divisible = true;
                    break;
                }
            if (!divisible) {
                std_monos.push_back(mw);
                any = true;
            }
        }
        if (!any) break;
    }
    std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> row_of;
    for (std::size_t i = 0; i < std_monos.size(); ++i) row_of.emplace(std_monos[i], i);

    std::vector<DifferentialForm> classes = standard_h2_classes(R);
    std::vector<std::string> labels = standard_h2_labels();
    MatQ M(std_monos.size(), classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j) {
        DifferentialForm d = exterior_d(classes[j]);
        Polynomial img = d.is_zero() ? Polynomial::zero(R) : d.component(kDx123);
        Polynomial nf = reduce_mod(gb, img.map_to(RW));
        for (const auto& tm : nf.terms()) {
            auto it = row_of.find(tm.mono);
            if (it == row_of.end())
                throw InternalConsistencyError("normal form outside the standard monomials");
            M.at(it->second, j) = tm.coeff.as_rational();
        }
    }

    SingularH2 out{CohomologyBasis{}, gb, std_monos};
    out.basis.surface = Surface::Sigma11;
    out.basis.params = {ParamValue(b)};
    for (const auto& v : M.kernel()) {
        DifferentialForm cls(R, 2);
        std::size_t label_idx = 0;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (v[j] == 0) continue;
            cls = cls + classes[j] * Scalar(v[j]);
            label_idx = j; // kernel vectors are normalized on their largest index
        }
        out.basis.classes.push_back(cls);
        out.basis.labels.push_back(labels[label_idx]);
    }
    out.basis.dimension = static_cast<int>(out.basis.classes.size());
    return out;
}

} // namespace repvar
