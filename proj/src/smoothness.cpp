#include "repvar/smoothness.hpp"

#include <algorithm>

namespace repvar {

namespace {
Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& m,
                         std::vector<int> rows, std::vector<int> cols,
                         const PolynomialRing& ring) {
    const std::size_t n = rows.size();
    if (n == 1) return m[(std::size_t)rows[0]][(std::size_t)cols[0]];
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Polynomial minor = det_recursive(m, sub_rows, sub_cols, ring);
        Polynomial piece = m[(std::size_t)rows[0]][(std::size_t)cols[k]] * minor;
        acc = (k % 2 == 0) ? acc + piece : acc - piece;
    }
    return acc;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx((std::size_t)k);
    for (int i = 0; i < k; ++i) idx[(std::size_t)i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[(std::size_t)i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[(std::size_t)i];
        for (int j = i + 1; j < k; ++j) idx[(std::size_t)j] = idx[(std::size_t)j - 1] + 1;
    }
}
} // namespace

JacobianIdealResult jacobian_ideal(const Ideal& ideal, int codim,
                                   const std::optional<std::vector<std::string>>& wrt) {
    if (codim < 1) throw Error("codimension must be >= 1");
    const PolynomialRing& R = ideal.ring;
    std::vector<std::string> cols = wrt ? *wrt : R.variables();
    const int k = static_cast<int>(ideal.generators.size());
    const int n = static_cast<int>(cols.size());
    if (codim > k || codim > n)
        throw Error("codimension exceeds Jacobian dimensions (" + std::to_string(k) + "x" +
                    std::to_string(n) + ")");
    for (const auto& g : ideal.generators)
        if (g.is_zero()) throw Error("jacobian_ideal: zero generator");

    std::vector<std::vector<Polynomial>> jac((std::size_t)k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            jac[(std::size_t)i].push_back(
                ideal.generators[(std::size_t)i].partial_derivative(cols[(std::size_t)j]));

    std::vector<Polynomial> gens = ideal.generators;
    int count = 0;
    combinations(k, codim, [&](const std::vector<int>& rows) {
        combinations(n, codim, [&](const std::vector<int>& cc) {
            Polynomial d = det_recursive(jac, rows, cc, R);
            ++count;
            if (!d.is_zero()) gens.push_back(std::move(d));
        });
    });
    return {Ideal(R, std::move(gens)), codim, count};
}

MatrixMonomialOrder paper_order_sigma11() {
    PolynomialRing R({"x3", "x2", "x1", "b"});
    return MatrixMonomialOrder(R, {{1, 1, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

MatrixMonomialOrder paper_order_sigma04() {
    PolynomialRing R({"x3", "x2", "x1", "b4", "b3", "b2", "b1"});
    return MatrixMonomialOrder(R, {{1, 1, 1, 0, 0, 0, 0},
                                   {1, 0, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 1, 1, 1},
                                   {0, 0, 0, 1, 1, 1, 0},
                                   {0, 0, 0, 1, 1, 0, 0},
                                   {0, 0, 0, 1, 0, 0, 0}});
}

MatrixMonomialOrder paper_order_sigma12() {
    PolynomialRing R({"x23", "x13", "x12", "x3", "x2", "x1", "b2", "b1"});
    return MatrixMonomialOrder(R, {{1, 1, 1, 1, 1, 1, 0, 0},
                                   {1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 1},
                                   {0, 0, 0, 0, 0, 0, 1, 0}});
}

MatrixMonomialOrder x_block_order(Surface s) {
    if (s == Surface::Sigma12) {
        PolynomialRing R({"x23", "x13", "x12", "x3", "x2", "x1"});
        return MatrixMonomialOrder(R, {{1, 1, 1, 1, 1, 1},
                                       {1, 0, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0, 0},
                                       {0, 0, 1, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, 1, 0}});
    }
    PolynomialRing R({"x3", "x2", "x1"});
    return MatrixMonomialOrder(R, {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}});
}

namespace {
BuchbergerOptions make_opts(const SingularLocusOptions& o) {
    BuchbergerOptions b;
    if (o.budget_seconds > 0)
        b.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(o.budget_seconds);
    b.progress = o.progress;
    b.threads = o.threads;
    return b;
}

// Fiber Jacobian ideal at exact parameters, over the paper-ordered x ring.
Ideal fiber_jacobian(Surface s, const std::vector<Rat>& b) {
    std::vector<ParamValue> pv;
    pv.reserve(b.size());
    for (const auto& x : b) pv.emplace_back(x);
    if (s == Surface::Sigma12) {
        Ideal fib = reduced_fiber_ideal_sigma12(pv);
        JacobianIdealResult j = jacobian_ideal(fib, 2);
        const PolynomialRing R = x_block_order(s).ring();
        std::vector<Polynomial> gens;
        gens.reserve(j.ideal.generators.size());
        for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(R));
        return Ideal(R, std::move(gens));
    }
    Ideal fib = fiber_ideal(s, pv);
    JacobianIdealResult j = jacobian_ideal(fib, 1);
    const PolynomialRing R = x_block_order(s).ring();
    std::vector<Polynomial> gens;
    gens.reserve(j.ideal.generators.size());
    for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(R));
    return Ideal(R, std::move(gens));
}

Polynomial unique_supported_generator(const std::vector<Polynomial>& elems,
                                      const std::string& what) {
    if (elems.empty())
        throw InternalConsistencyError("elimination produced no " + what + " generator");
    if (elems.size() > 1)
        throw InternalConsistencyError("elimination produced " + std::to_string(elems.size()) +
                                       " generators for " + what + "; expected one");
    return elems[0];
}
} // namespace

bool is_smooth_fiber(Surface s, const std::vector<Rat>& b) {
    Ideal J = fiber_jacobian(s, b);
    GroebnerBasis gb = buchberger(J, x_block_order(s));
    return gb.is_unit_ideal();
}

Polynomial singular_locus(Surface s, const SingularLocusOptions& opts) {
    BuchbergerOptions bopts = make_opts(opts);
    switch (s) {
        case Surface::Sigma11: {
            Ideal fib = fiber_ideal(s, {std::nullopt});
            JacobianIdealResult j = jacobian_ideal(fib, 1, std::vector<std::string>{"x1", "x2", "x3"});
            MatrixMonomialOrder W = paper_order_sigma11();
            std::vector<Polynomial> gens;
            for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(W.ring()));
            auto out = eliminate(Ideal(W.ring(), gens), W, {"b"}, bopts);
            Polynomial psi = unique_supported_generator(out, "sigma11 singular locus");
            return psi.map_to(PolynomialRing({"b"}));
        }
        case Surface::Sigma04: {
            Ideal fib = fiber_ideal(s, {std::nullopt, std::nullopt, std::nullopt, std::nullopt});
            JacobianIdealResult j = jacobian_ideal(fib, 1, std::vector<std::string>{"x1", "x2", "x3"});
            MatrixMonomialOrder W = paper_order_sigma04();
            std::vector<Polynomial> gens;
            for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(W.ring()));
            auto out = eliminate(Ideal(W.ring(), gens), W, {"b4", "b3", "b2", "b1"}, bopts);
            Polynomial psi = unique_supported_generator(out, "sigma04 singular locus");
            return psi.map_to(PolynomialRing({"b1", "b2", "b3", "b4"}));
        }
        case Surface::Sigma12: {
            Ideal fib = reduced_fiber_ideal_sigma12({std::nullopt, std::nullopt});
            JacobianIdealResult j = jacobian_ideal(
                fib, 2, std::vector<std::string>{"x1", "x2", "x3", "x12", "x13", "x23"});
            MatrixMonomialOrder W = paper_order_sigma12();
            std::vector<Polynomial> gens;
            for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(W.ring()));
            auto out = eliminate(Ideal(W.ring(), gens), W, {"b2", "b1"}, bopts);
            Polynomial psi = unique_supported_generator(out, "sigma12 singular locus");
            return psi.map_to(PolynomialRing({"b1", "b2"}));
        }
    }
    throw UnknownSurfaceError("bad surface tag");
}

SliceResult singular_locus_slice(const std::vector<Rat>& fixed_b234,
                                 const SingularLocusOptions& opts) {
    if (fixed_b234.size() != 3)
        throw ArityMismatchError("slice takes fixed values for b2,b3,b4");
    for (const auto& v : fixed_b234)
        if (v * v == 4) throw Error("slice values must avoid the (b_i^2-4) locus");

    Ideal fib = fiber_ideal(Surface::Sigma04,
                            {std::nullopt, fixed_b234[0], fixed_b234[1], fixed_b234[2]});
    JacobianIdealResult j = jacobian_ideal(fib, 1, std::vector<std::string>{"x1", "x2", "x3"});
    PolynomialRing R({"x3", "x2", "x1", "b1"});
    MatrixMonomialOrder W(R, {{1, 1, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    std::vector<Polynomial> gens;
    for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(R));
    auto out = eliminate(Ideal(R, gens), W, {"b1"}, make_opts(opts));
    Polynomial slice = unique_supported_generator(out, "sigma04 slice");
    slice = slice.map_to(PolynomialRing({"b1"}));
    return {slice, slice.is_constant()};
}

SliceResult singular_locus_slice_sigma12(const Rat& fixed_b2, const SingularLocusOptions& opts) {
    if (fixed_b2 * fixed_b2 == 4) throw Error("slice value must avoid the (b2^2-4) locus");
    Ideal fib = reduced_fiber_ideal_sigma12({std::nullopt, fixed_b2});
    JacobianIdealResult j = jacobian_ideal(
        fib, 2, std::vector<std::string>{"x1", "x2", "x3", "x12", "x13", "x23"});
    PolynomialRing R({"x23", "x13", "x12", "x3", "x2", "x1", "b1"});
    MatrixMonomialOrder W(R, {{1, 1, 1, 1, 1, 1, 0},
                              {1, 0, 0, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0, 0},
                              {0, 0, 1, 0, 0, 0, 0},
                              {0, 0, 0, 1, 0, 0, 0},
                              {0, 0, 0, 0, 1, 0, 0},
                              {0, 0, 0, 0, 0, 0, 1}});
    std::vector<Polynomial> gens;
    for (const auto& g : j.ideal.generators) gens.push_back(g.map_to(R));
    auto out = eliminate(Ideal(R, gens), W, {"b1"}, make_opts(opts));
    Polynomial slice = unique_supported_generator(out, "sigma12 slice");
    slice = slice.map_to(PolynomialRing({"b1"}));
    return {slice, slice.is_constant()};
}

UniPoly poly_to_unipoly(const Polynomial& p, const std::string& var) {
    int vi = p.ring().index_of(var);
    std::vector<Rat> coeffs;
    for (const auto& t : p.terms()) {
        for (int i = 0; i < p.ring().nvars(); ++i)
            if (i != vi && t.mono[i] > 0)
                throw Error("polynomial is not univariate in " + var);
        int e = t.mono[vi];
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize((std::size_t)e + 1, Rat(0));
        coeffs[(std::size_t)e] = t.coeff.as_rational();
    }
    return UniPoly(var, std::move(coeffs));
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    UniPoly g = UniPoly::gcd(p, p.derivative());
    return p.divrem(g).first.monic();
}

} // namespace repvar
