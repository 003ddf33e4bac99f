#ifndef REPVAR_POLYNOMIAL_HPP
#define REPVAR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "repvar/order.hpp"
#include "repvar/ring.hpp"

namespace repvar {

struct Term {
    ExponentVector mono;
    Scalar coeff;
};

// Sparse multivariate polynomial over an exact field. Terms are stored in
// canonical form: no zero coefficients, sorted descending under deglex on the
// ring's variable sequence. Two polynomials over the same ring are equal iff
// their term vectors are equal.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(PolynomialRing ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const PolynomialRing& ring) { return Polynomial(ring); }
    static Polynomial one(const PolynomialRing& ring) { return constant(ring, Scalar(1)); }
    static Polynomial constant(const PolynomialRing& ring, const Scalar& c);
    static Polynomial variable(const PolynomialRing& ring, const std::string& name);
    static Polynomial monomial(const PolynomialRing& ring, const ExponentVector& m, const Scalar& c);
    // From arbitrary (possibly unsorted, duplicated) terms.
    static Polynomial from_terms(const PolynomialRing& ring, std::vector<Term> terms);

    const PolynomialRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const; // -1 for zero
    long degree_in(const std::string& var) const;

    // Coefficient of a given monomial (zero scalar if absent).
    Scalar coeff_of(const ExponentVector& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Scalar& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(unsigned k) const;

    // Leading term under an order (defaults to deglex on the ring sequence).
    const Term& leading_term(const MatrixMonomialOrder& order) const;
    const Term& leading_term_deglex() const;

    Polynomial partial_derivative(const std::string& var) const;

    // Exact evaluation; every ring variable must be assigned.
    Scalar eval(const std::map<std::string, Scalar>& point) const;

    // Replace a variable by a scalar value (stays in the same ring; the
    // variable no longer occurs in the result).
    Polynomial substitute(const std::string& var, const Scalar& value) const;
    // Replace a variable by a polynomial of the same ring.
    Polynomial substitute(const std::string& var, const Polynomial& value) const;

    // Map into another ring, matching variables by name (or via the rename
    // map first). Every variable with a nonzero exponent must exist there.
    Polynomial map_to(const PolynomialRing& target,
                      const std::map<std::string, std::string>& rename = {}) const;

    // Multiply through by denominators and divide by integer content; leading
    // coefficient (under deglex) positive. Rational coefficient field only.
    Polynomial primitive_part() const;

    // Sorted descending under `order` (a convenience view; storage stays deglex).
    std::vector<Term> terms_sorted(const MatrixMonomialOrder& order) const;

    std::string to_string() const;
    std::string to_string(const MatrixMonomialOrder& order) const;

private:
    void normalize();
    PolynomialRing ring_;
    std::vector<Term> terms_;
};

// Canonical polynomial text parser (see to_string for the format).
Polynomial poly_parse(const std::string& text, const PolynomialRing& ring);

// Order comparison helper used for canonical storage: deglex on ring sequence.
bool deglex_greater(const ExponentVector& a, const ExponentVector& b);

} // namespace repvar

#endif
