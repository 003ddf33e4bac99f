#include "repvar/groebner.hpp"

#include <algorithm>
#include <unordered_set>

namespace repvar {

Ideal::Ideal(PolynomialRing r, std::vector<Polynomial> gens)
    : ring(std::move(r)), generators(std::move(gens)) {
    for (const auto& g : generators)
        if (g.ring() != ring) throw RingMismatchError("ideal generator not in the stated ring");
}

namespace {

struct KPoly {
    std::vector<Term> t; // sorted descending under the active order

    bool is_zero() const { return t.empty(); }
    const Term& lt() const { return t.front(); }
};

KPoly to_kpoly(const Polynomial& p, const MatrixMonomialOrder& order) {
    KPoly k;
    k.t = p.terms_sorted(order);
    return k;
}

Polynomial to_polynomial(const KPoly& k, const PolynomialRing& ring) {
    return Polynomial::from_terms(ring, k.t);
}

// Replace the live suffix r.t[pos..] by (r.t[pos..] - c * x^shift * g), where
// the heads cancel exactly (r.t[pos] == c*x^shift*lt(g)). Returns a fresh
// vector holding only the surviving terms.
std::vector<Term> subtract_shifted(const std::vector<Term>& r, std::size_t pos, const Scalar& c,
                                   const ExponentVector& shift, const KPoly& g,
                                   const MatrixMonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(r.size() - pos + g.t.size());
    std::size_t i = pos + 1, j = 1; // heads cancel
    while (i < r.size() && j < g.t.size()) {
        ExponentVector gm = g.t[j].mono + shift;
        Cmp cmp = order.compare(r[i].mono, gm);
        if (cmp == Cmp::Greater) {
            out.push_back(r[i++]);
        } else if (cmp == Cmp::Less) {
            out.push_back({gm, -(c * g.t[j].coeff)});
            ++j;
        } else {
            Scalar nc = r[i].coeff - c * g.t[j].coeff;
            if (!nc.is_zero()) out.push_back({r[i].mono, std::move(nc)});
            ++i;
            ++j;
        }
    }
    while (i < r.size()) out.push_back(r[i++]);
    while (j < g.t.size()) {
        out.push_back({g.t[j].mono + shift, -(c * g.t[j].coeff)});
        ++j;
    }
    return out;
}

struct Quotient {
    std::vector<Term> t; // unsorted accumulation
};

// Full normal form: every term of the result is irreducible by every divisor's
// leading term. Divisors tried in sequence order.
KPoly reduce_full(KPoly work, const std::vector<KPoly>& divisors,
                  const MatrixMonomialOrder& order, std::vector<Quotient>* quotients) {
    KPoly result;
    std::size_t pos = 0; // work.t[pos..) is live
    while (pos < work.t.size()) {
        const Term& head = work.t[pos];
        int chosen = -1;
        for (std::size_t d = 0; d < divisors.size(); ++d) {
            if (!divisors[d].is_zero() && divisors[d].lt().mono.divides(head.mono)) {
                chosen = static_cast<int>(d);
                break;
            }
        }
        if (chosen < 0) {
            result.t.push_back(head);
            ++pos;
            continue;
        }
        const KPoly& g = divisors[static_cast<std::size_t>(chosen)];
        ExponentVector shift = head.mono - g.lt().mono;
        Scalar c = head.coeff / g.lt().coeff;
        if (quotients) (*quotients)[static_cast<std::size_t>(chosen)].t.push_back({shift, c});
        work.t = subtract_shifted(work.t, pos, c, shift, g, order);
        pos = 0;
    }
    return result;
}

// Head reduction only: stops as soon as the leading term is irreducible (or
// the polynomial vanishes). Divisors are scanned through `scan`, which the
// completion loop keeps sorted by ascending leading term so small reducers
// are preferred.
KPoly reduce_head(KPoly work, const std::vector<KPoly>& basis, const std::vector<int>& scan,
                  const MatrixMonomialOrder& order) {
    while (!work.t.empty()) {
        const Term& head = work.t.front();
        int chosen = -1;
        for (int d : scan) {
            if (basis[static_cast<std::size_t>(d)].lt().mono.divides(head.mono)) {
                chosen = d;
                break;
            }
        }
        if (chosen < 0) return work;
        const KPoly& g = basis[static_cast<std::size_t>(chosen)];
        ExponentVector shift = head.mono - g.lt().mono;
        Scalar c = head.coeff / g.lt().coeff;
        work.t = subtract_shifted(work.t, 0, c, shift, g, order);
    }
    return work;
}

KPoly s_poly_k(const KPoly& f, const KPoly& g, const MatrixMonomialOrder& order) {
    ExponentVector L = ExponentVector::lcm(f.lt().mono, g.lt().mono);
    // (x^(L-ltf)/lcf) f - (x^(L-ltg)/lcg) g
    ExponentVector sf = L - f.lt().mono;
    ExponentVector sg = L - g.lt().mono;
    Scalar icf = f.lt().coeff.inverse();
    Scalar icg = g.lt().coeff.inverse();
    KPoly a;
    a.t.reserve(f.t.size());
    for (const auto& t : f.t) a.t.push_back({t.mono + sf, t.coeff * icf});
    KPoly out;
    out.t.reserve(f.t.size() + g.t.size());
    // merge subtract b from a (heads cancel: both are L with coefficient 1)
    std::size_t i = 1, j = 1;
    while (i < a.t.size() && j < g.t.size()) {
        ExponentVector gm = g.t[j].mono + sg;
        Cmp cmp = order.compare(a.t[i].mono, gm);
        if (cmp == Cmp::Greater) {
            out.t.push_back(a.t[i++]);
        } else if (cmp == Cmp::Less) {
            out.t.push_back({gm, -(g.t[j].coeff * icg)});
            ++j;
        } else {
            Scalar nc = a.t[i].coeff - g.t[j].coeff * icg;
            if (!nc.is_zero()) out.t.push_back({a.t[i].mono, std::move(nc)});
            ++i;
            ++j;
        }
    }
    while (i < a.t.size()) out.t.push_back(a.t[i++]);
    while (j < g.t.size()) {
        out.t.push_back({g.t[j].mono + sg, -(g.t[j].coeff * icg)});
        ++j;
    }
    return out;
}

// Keep integer content-free coefficients with positive leading sign (rational
// field); monic otherwise. Controls coefficient growth during completion.
void normalize_element(KPoly& h, const PolynomialRing& ring) {
    if (h.is_zero()) return;
    if (ring.field().kind == CoeffKind::Rational) {
        mpz_class den_lcm(1);
        for (const auto& t : h.t) {
            mpz_class d = t.coeff.as_rational().get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        mpz_class num_gcd(0);
        for (const auto& t : h.t) {
            Rat r = t.coeff.as_rational();
            mpz_class n = r.get_num() * (den_lcm / r.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        Rat scale = Rat(den_lcm) / Rat(num_gcd);
        if (sgn(h.lt().coeff.as_rational()) < 0) scale = -scale;
        Scalar s{scale};
        for (auto& t : h.t) t.coeff = t.coeff * s;
    } else {
        Scalar inv = h.lt().coeff.inverse();
        for (auto& t : h.t) t.coeff = t.coeff * inv;
    }
}

struct PairKey {
    ExponentVector lcm;
    int i, j; // i < j
};

struct PairCmp {
    const MatrixMonomialOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        Cmp c = order->compare(a.lcm, b.lcm);
        if (c != Cmp::Equal) return c == Cmp::Less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::uint64_t pair_id(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

struct Engine {
    const PolynomialRing& ring;
    const MatrixMonomialOrder& order;
    const BuchbergerOptions& opts;
    std::vector<KPoly> basis;
    std::set<PairKey, PairCmp> queue;
    std::unordered_set<std::uint64_t> treated;
    ComputationStats stats;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last_report = std::chrono::steady_clock::now();

    Engine(const PolynomialRing& r, const MatrixMonomialOrder& o, const BuchbergerOptions& op)
        : ring(r), order(o), opts(op), queue(PairCmp{&o}) {}

    void add_pairs_for(int t) {
        for (int i = 0; i < t; ++i) {
            if (basis[static_cast<std::size_t>(i)].is_zero()) continue;
            queue.insert({ExponentVector::lcm(basis[static_cast<std::size_t>(i)].lt().mono,
                                              basis[static_cast<std::size_t>(t)].lt().mono),
                          i, t});
        }
    }

    void tick() {
        auto now = std::chrono::steady_clock::now();
        stats.elapsed_seconds = std::chrono::duration<double>(now - started).count();
        stats.pairs_remaining = queue.size();
        stats.basis_size = basis.size();
        if (opts.progress && now - last_report > std::chrono::milliseconds(500)) {
            last_report = now;
            opts.progress(stats);
        }
        if (opts.deadline && now > *opts.deadline)
            throw BudgetExceededError("Groebner computation exceeded its time budget", stats);
    }

    void run() {
        for (int t = 1; t < static_cast<int>(basis.size()); ++t) add_pairs_for(t);
        std::size_t pops = 0;
        while (!queue.empty()) {
            PairKey pk = *queue.begin();
            queue.erase(queue.begin());
            treated.insert(pair_id(pk.i, pk.j));
            ++stats.pairs_processed;
            if (++pops % 16 == 0 || opts.progress) tick();

            const KPoly& f = basis[static_cast<std::size_t>(pk.i)];
            const KPoly& g = basis[static_cast<std::size_t>(pk.j)];
            // product criterion
            if (f.lt().mono.coprime_with(g.lt().mono)) continue;
            // chain criterion
            bool skip = false;
            for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
                if (k == pk.i || k == pk.j || basis[static_cast<std::size_t>(k)].is_zero()) continue;
                if (!basis[static_cast<std::size_t>(k)].lt().mono.divides(pk.lcm)) continue;
                if (treated.count(pair_id(std::min(pk.i, k), std::max(pk.i, k))) &&
                    treated.count(pair_id(std::min(pk.j, k), std::max(pk.j, k)))) {
                    skip = true;
                    break;
                }
            }
            if (skip) continue;

            KPoly s = s_poly_k(f, g, order);
            KPoly h = reduce_full(std::move(s), basis, order, nullptr);
            if (h.is_zero()) continue;
            normalize_element(h, ring);
            stats.max_degree_seen = std::max(stats.max_degree_seen, h.lt().mono.total_degree());
            basis.push_back(std::move(h));
            add_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    // Minimalize + tail-reduce + monic; returns elements sorted descending by LT.
    std::vector<KPoly> reduced_basis() {
        std::vector<KPoly> nonzero;
        for (auto& g : basis)
            if (!g.is_zero()) nonzero.push_back(std::move(g));
        std::sort(nonzero.begin(), nonzero.end(), [&](const KPoly& a, const KPoly& b) {
            return order.less(a.lt().mono, b.lt().mono);
        });
        std::vector<KPoly> minimal;
        for (auto& g : nonzero) {
            bool divisible = false;
            for (const auto& h : minimal)
                if (h.lt().mono.divides(g.lt().mono)) {
                    divisible = true;
                    break;
                }
            if (!divisible) minimal.push_back(std::move(g));
        }
        // tail reduction against the (updating) set
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<KPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            minimal[i] = reduce_full(std::move(minimal[i]), others, order, nullptr);
        }
        for (auto& g : minimal) {
            Scalar inv = g.lt().coeff.inverse();
            for (auto& t : g.t) t.coeff = t.coeff * inv;
        }
        std::sort(minimal.begin(), minimal.end(), [&](const KPoly& a, const KPoly& b) {
            return order.greater(a.lt().mono, b.lt().mono);
        });
        return minimal;
    }
};

} // namespace

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                      const MatrixMonomialOrder& order) {
    const PolynomialRing& ring = p.ring();
    if (order.ring() != ring) throw RingMismatchError("order over a different ring");
    std::vector<KPoly> ds;
    ds.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.ring() != ring) throw RingMismatchError("divisor over a different ring");
        ds.push_back(to_kpoly(d, order));
    }
    std::vector<Quotient> qs(divisors.size());
    KPoly r = reduce_full(to_kpoly(p, order), ds, order, &qs);
    DivisionResult out;
    out.remainder = to_polynomial(r, ring);
    out.quotients.reserve(divisors.size());
    for (auto& q : qs) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q.t)));
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MatrixMonomialOrder& order) {
    if (f.ring() != g.ring()) throw RingMismatchError("s-polynomial over different rings");
    if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of zero polynomial");
    return to_polynomial(s_poly_k(to_kpoly(f, order), to_kpoly(g, order), order), f.ring());
}

GroebnerBasis buchberger(const Ideal& ideal, const MatrixMonomialOrder& order,
                         const BuchbergerOptions& opts) {
    if (order.ring() != ideal.ring) throw RingMismatchError("order over a different ring");
    if (ideal.generators.empty()) throw Error("buchberger: empty generator sequence");
    Engine eng(ideal.ring, order, opts);
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        KPoly k = to_kpoly(g, order);
        normalize_element(k, ideal.ring);
        // skip exact duplicates
        bool dup = false;
        for (const auto& have : eng.basis)
            if (have.t.size() == k.t.size()) {
                bool eq = true;
                for (std::size_t i = 0; i < k.t.size(); ++i)
                    if (have.t[i].mono != k.t[i].mono || have.t[i].coeff != k.t[i].coeff) {
                        eq = false;
                        break;
                    }
                if (eq) {
                    dup = true;
                    break;
                }
            }
        if (!dup) eng.basis.push_back(std::move(k));
    }
    std::vector<Polynomial> elems;
    if (!eng.basis.empty()) {
        eng.run();
        for (auto& k : eng.reduced_basis()) elems.push_back(to_polynomial(k, ideal.ring));
    }
    return GroebnerBasis(ideal, order, std::move(elems));
}

Polynomial reduce_mod(const GroebnerBasis& gb, const Polynomial& p) {
    if (p.ring() != gb.ideal().ring) throw RingMismatchError("polynomial over a different ring");
    std::vector<KPoly> ds;
    ds.reserve(gb.elements().size());
    for (const auto& d : gb.elements()) ds.push_back(to_kpoly(d, gb.order()));
    KPoly r = reduce_full(to_kpoly(p, gb.order()), ds, gb.order(), nullptr);
    return to_polynomial(r, p.ring());
}

std::vector<Polynomial> eliminate(const Ideal& ideal, const MatrixMonomialOrder& order,
                                  const std::vector<std::string>& keep,
                                  const BuchbergerOptions& opts) {
    std::vector<int> keep_idx;
    keep_idx.reserve(keep.size());
    for (const auto& name : keep) keep_idx.push_back(ideal.ring.index_of(name));
    if (!order.eliminates_complement_of(keep_idx))
        throw OrderNotEliminatingError(
            "weight matrix does not isolate the eliminated variable block");
    GroebnerBasis gb = buchberger(ideal, order, opts);
    std::vector<bool> kept(static_cast<std::size_t>(ideal.ring.nvars()), false);
    for (int k : keep_idx) kept[static_cast<std::size_t>(k)] = true;
    std::vector<Polynomial> out;
    for (const auto& g : gb.elements()) {
        bool ok = true;
        for (const auto& t : g.terms()) {
            for (int i = 0; ok && i < ideal.ring.nvars(); ++i)
                if (t.mono[i] > 0 && !kept[static_cast<std::size_t>(i)]) ok = false;
            if (!ok) break;
        }
        if (ok) out.push_back(ideal.ring.field().kind == CoeffKind::Rational ? g.primitive_part() : g);
    }
    return out;
}

// ---------------- extended completion for lifting ----------------

namespace {
struct EPoly {
    KPoly p;
    std::vector<Polynomial> rep; // p = sum rep_k * gens_k
};

// Reduce work against basis, tracking the representation of the result.
EPoly reduce_full_ext(EPoly work, const std::vector<EPoly>& basis,
                      const MatrixMonomialOrder& order, const PolynomialRing& ring) {
    KPoly result;
    std::size_t pos = 0;
    while (pos < work.p.t.size()) {
        const Term& head = work.p.t[pos];
        int chosen = -1;
        for (std::size_t d = 0; d < basis.size(); ++d)
            if (!basis[d].p.is_zero() && basis[d].p.lt().mono.divides(head.mono)) {
                chosen = static_cast<int>(d);
                break;
            }
        if (chosen < 0) {
            result.t.push_back(head);
            ++pos;
            continue;
        }
        const EPoly& g = basis[static_cast<std::size_t>(chosen)];
        ExponentVector shift = head.mono - g.p.lt().mono;
        Scalar c = head.coeff / g.p.lt().coeff;
        Polynomial mult = Polynomial::monomial(ring, shift, c);
        for (std::size_t k = 0; k < work.rep.size(); ++k)
            work.rep[k] = work.rep[k] - mult * g.rep[k];
        work.p.t = subtract_shifted(work.p.t, pos, c, shift, g.p, order);
        pos = 0;
    }
    work.p = std::move(result);
    return work;
}
} // namespace

std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& target,
                                                       const std::vector<Polynomial>& gens,
                                                       const MatrixMonomialOrder& order) {
    const PolynomialRing& ring = target.ring();
    std::vector<EPoly> basis;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].ring() != ring) throw RingMismatchError("generator over a different ring");
        if (gens[k].is_zero()) continue;
        EPoly e;
        e.p = to_kpoly(gens[k], order);
        e.rep.assign(gens.size(), Polynomial::zero(ring));
        e.rep[k] = Polynomial::one(ring);
        basis.push_back(std::move(e));
    }
    // naive completion (no criteria): adequate for the small lifting ideals
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            ExponentVector L = ExponentVector::lcm(basis[i].p.lt().mono, basis[j].p.lt().mono);
            ExponentVector si = L - basis[i].p.lt().mono;
            ExponentVector sj = L - basis[j].p.lt().mono;
            EPoly s;
            s.p = s_poly_k(basis[i].p, basis[j].p, order);
            s.rep.assign(basis[i].rep.size(), Polynomial::zero(ring));
            Polynomial mi = Polynomial::monomial(ring, si, basis[i].p.lt().coeff.inverse());
            Polynomial mj = Polynomial::monomial(ring, sj, basis[j].p.lt().coeff.inverse());
            for (std::size_t k = 0; k < s.rep.size(); ++k)
                s.rep[k] = mi * basis[i].rep[k] - mj * basis[j].rep[k];
            EPoly h = reduce_full_ext(std::move(s), basis, order, ring);
            if (!h.p.is_zero()) basis.push_back(std::move(h));
        }
    }
    EPoly t;
    t.p = to_kpoly(target, order);
    t.rep.assign(gens.size(), Polynomial::zero(ring));
    EPoly r = reduce_full_ext(std::move(t), basis, order, ring);
    if (!r.p.is_zero()) return std::nullopt;
    std::vector<Polynomial> cof;
    cof.reserve(gens.size());
    for (auto& q : r.rep) cof.push_back(-q);
    return cof;
}

} // namespace repvar
