#ifndef REPVAR_FORMS_HPP
#define REPVAR_FORMS_HPP

#include <map>
#include <string>

#include "repvar/polynomial.hpp"

namespace repvar {

// An ordered index subset of variable positions, kept as a bitmask (bit i set
// means dx_i is a factor, positions 0-based into the ring's variable sequence).
using IndexMask = std::uint16_t;

int mask_degree(IndexMask k);
std::string mask_to_string(IndexMask k); // "{23}" with 1-based positions

// Graded exterior-algebra element with polynomial coefficients on wedge
// monomials dx_K. Components with zero coefficient are not stored.
class DifferentialForm {
public:
    DifferentialForm() = default;
    DifferentialForm(PolynomialRing ring, int degree);

    static DifferentialForm from_polynomial(const Polynomial& p); // degree 0
    // p * dx_K
    static DifferentialForm monomial_form(const Polynomial& p, IndexMask k);
    static DifferentialForm zero(const PolynomialRing& ring, int degree) {
        return DifferentialForm(ring, degree);
    }

    const PolynomialRing& ring() const { return ring_; }
    int degree() const { return degree_; }
    bool is_zero() const { return comps_.empty(); }
    const std::map<IndexMask, Polynomial>& components() const { return comps_; }
    Polynomial component(IndexMask k) const;

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    DifferentialForm operator*(const Scalar& c) const;
    DifferentialForm operator*(const Polynomial& p) const; // module action
    bool operator==(const DifferentialForm& o) const;
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void insert(IndexMask k, Polynomial p);
    friend DifferentialForm wedge(const DifferentialForm&, const DifferentialForm&);
    friend DifferentialForm exterior_d(const DifferentialForm&);

    PolynomialRing ring_;
    int degree_ = 0;
    std::map<IndexMask, Polynomial> comps_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_d(const DifferentialForm& a);

// Remark 3.3 isomorphisms between functions and top-degree forms.
DifferentialForm p_iso(const Polynomial& p);
Polynomial p_iso_inv(const DifferentialForm& top);

// Sign of dx_a ∧ dx_B when inserting index a into sorted mask B (a not in B).
int insertion_sign(int a, IndexMask b);

} // namespace repvar

#endif
