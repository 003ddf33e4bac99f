#ifndef REPVAR_GROEBNER_HPP
#define REPVAR_GROEBNER_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "repvar/polynomial.hpp"

namespace repvar {

struct Ideal {
    PolynomialRing ring;
    std::vector<Polynomial> generators;

    Ideal(PolynomialRing r, std::vector<Polynomial> gens);
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Multivariate division: p = sum q_i d_i + r, no term of r divisible by any
// divisor's leading term. Divisors are tried in sequence order, so the result
// is deterministic.
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                      const MatrixMonomialOrder& order);

struct BuchbergerOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::function<void(const ComputationStats&)> progress; // called every ~0.5s
    int threads = 1;
};

class GroebnerBasis {
public:
    GroebnerBasis(Ideal ideal, MatrixMonomialOrder order, std::vector<Polynomial> elements)
        : ideal_(std::move(ideal)), order_(std::move(order)), elements_(std::move(elements)) {}

    const Ideal& ideal() const { return ideal_; }
    const MatrixMonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool is_unit_ideal() const {
        return elements_.size() == 1 && elements_[0].is_one();
    }

private:
    Ideal ideal_;
    MatrixMonomialOrder order_;
    std::vector<Polynomial> elements_;
};

// Reduced Groebner basis by Buchberger's algorithm with the product and chain
// criteria and normal (smallest-lcm) pair selection. Output elements are
// monic and sorted descending by leading term.
GroebnerBasis buchberger(const Ideal& ideal, const MatrixMonomialOrder& order,
                         const BuchbergerOptions& opts = {});

// Unique normal form of p modulo the basis; zero iff p is in the ideal.
Polynomial reduce_mod(const GroebnerBasis& gb, const Polynomial& p);

// Generators of ideal ∩ k[keep]: the basis elements supported on `keep`,
// made primitive. The order must eliminate the complement of `keep`.
std::vector<Polynomial> eliminate(const Ideal& ideal, const MatrixMonomialOrder& order,
                                  const std::vector<std::string>& keep,
                                  const BuchbergerOptions& opts = {});

// Express target as sum q_i * gens_i if target lies in the ideal (extended
// Buchberger with cofactor tracking; meant for small ideals).
std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& target,
                                                       const std::vector<Polynomial>& gens,
                                                       const MatrixMonomialOrder& order);

// S-polynomial (exposed for tests and property suites).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MatrixMonomialOrder& order);

} // namespace repvar

#endif
