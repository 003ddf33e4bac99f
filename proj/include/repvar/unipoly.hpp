#ifndef REPVAR_UNIPOLY_HPP
#define REPVAR_UNIPOLY_HPP

#include <string>
#include <vector>

#include "repvar/errors.hpp"
#include "repvar/rational.hpp"

namespace repvar {

// Dense univariate polynomial over Q in a named variable. Coefficient i is the
// coefficient of var^i; the top coefficient is always nonzero (zero polynomial
// has an empty coefficient vector, degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rat> coeffs);

    static UniPoly constant(const std::string& var, const Rat& c);
    static UniPoly variable(const std::string& var);
    // c * var^k
    static UniPoly monomial(const std::string& var, const Rat& c, int k);

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& coeff(int i) const;
    const Rat& leading_coeff() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const Rat& c) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Exact division with remainder over Q.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly pow(unsigned k) const;
    UniPoly monic() const;
    // Integer-coefficient, content 1, positive leading coefficient.
    UniPoly primitive() const;

    // Monic gcd.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    // Canonical text, descending powers: "b^2-4", "t", "3/2".
    std::string to_string() const;

private:
    void trim();
    std::string var_ = "t";
    std::vector<Rat> c_;
};

// Univariate rational function over Q, kept in lowest terms with monic
// denominator. The denominator of the zero function is 1.
class RatFunc {
public:
    RatFunc() : num_(), den_() { den_ = UniPoly::constant("t", 1); }
    explicit RatFunc(const Rat& c, const std::string& var = "t");
    explicit RatFunc(UniPoly num);
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc variable(const std::string& var) { return RatFunc(UniPoly::variable(var)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& var() const { return den_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Requires is_constant().
    Rat constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc derivative() const;
    // Exact value; throws Error at a pole.
    Rat eval(const Rat& x) const;

    // "(b-4)/(b^2-4)", "b^2-4", "3/2"
    std::string to_string() const;

private:
    void normalize();
    UniPoly num_, den_;
};

} // namespace repvar

#endif
