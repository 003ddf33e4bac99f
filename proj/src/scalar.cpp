#include "repvar/scalar.hpp"

#include "repvar/errors.hpp"

namespace repvar {

bool Scalar::is_zero() const {
    if (is_rational()) return std::get<Rat>(v_) == 0;
    return std::get<RatFunc>(v_).is_zero();
}

bool Scalar::is_one() const {
    if (is_rational()) return std::get<Rat>(v_) == 1;
    const auto& f = std::get<RatFunc>(v_);
    return f.is_constant() && !f.is_zero() && f.constant_value() == 1;
}

Rat Scalar::as_rational() const {
    if (is_rational()) return std::get<Rat>(v_);
    const auto& f = std::get<RatFunc>(v_);
    if (!f.is_constant()) throw Error("scalar is not a rational number: " + f.to_string());
    return f.constant_value();
}

RatFunc Scalar::as_ratfunc(const std::string& var) const {
    if (is_rational()) return RatFunc(std::get<Rat>(v_), var);
    return std::get<RatFunc>(v_);
}

namespace {
template <class Op>
Scalar binop(const Scalar& a, const Scalar& b, Op op) {
    // Coerce to the richer kind.
    if (a.is_rational() && b.is_rational())
        return Scalar(op(a.as_rational(), b.as_rational()));
    std::string var = a.is_rational() ? b.as_ratfunc("t").var() : a.as_ratfunc("t").var();
    return Scalar(op(a.as_ratfunc(var), b.as_ratfunc(var)));
}
} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    return binop(*this, o, [](const auto& x, const auto& y) { return x + y; });
}
Scalar Scalar::operator-(const Scalar& o) const {
    return binop(*this, o, [](const auto& x, const auto& y) { return x - y; });
}
Scalar Scalar::operator*(const Scalar& o) const {
    return binop(*this, o, [](const auto& x, const auto& y) { return x * y; });
}
Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw Error("scalar division by zero");
    return binop(*this, o, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-std::get<Rat>(v_));
    return Scalar(-std::get<RatFunc>(v_));
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() && o.is_rational()) return std::get<Rat>(v_) == std::get<Rat>(o.v_);
    if (is_rational() != o.is_rational()) {
        // A constant rational function equals the rational it represents.
        const Scalar& rf = is_rational() ? o : *this;
        const Scalar& rr = is_rational() ? *this : o;
        const auto& f = std::get<RatFunc>(rf.v_);
        return f.is_constant() && f.constant_value() == std::get<Rat>(rr.v_);
    }
    return std::get<RatFunc>(v_) == std::get<RatFunc>(o.v_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("inverse of zero scalar");
    if (is_rational()) return Scalar(Rat(1) / std::get<Rat>(v_));
    return Scalar(std::get<RatFunc>(v_).inverse());
}

std::string Scalar::to_string() const {
    if (is_rational()) return rat_to_string(std::get<Rat>(v_));
    return std::get<RatFunc>(v_).to_string();
}

} // namespace repvar
