#ifndef REPVAR_SCALAR_HPP
#define REPVAR_SCALAR_HPP

#include <string>
#include <variant>

#include "repvar/rational.hpp"
#include "repvar/unipoly.hpp"

namespace repvar {

// An exact field element: a rational number or a univariate rational function
// over Q. Arithmetic between the two kinds coerces the rational side.
class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    Scalar(long n) : v_(Rat(n)) {}
    Scalar(Rat r) : v_(std::move(r)) {}
    Scalar(RatFunc f) : v_(std::move(f)) {}

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    bool is_zero() const;
    bool is_one() const;

    // Throws if the value is a non-constant rational function.
    Rat as_rational() const;
    // Promotes a rational to a constant function of `var`.
    RatFunc as_ratfunc(const std::string& var) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    std::string to_string() const;

private:
    std::variant<Rat, RatFunc> v_;
};

} // namespace repvar

#endif
