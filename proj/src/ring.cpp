#include "repvar/ring.hpp"

#include <algorithm>
#include <set>

namespace repvar {

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    if (n != o.n) throw DimensionMismatchError("exponent vector length mismatch");
    ExponentVector r = *this;
    for (int i = 0; i < n; ++i) {
        long s = r.e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
        if (s > 0xFFFF) throw Error("exponent overflow");
        r.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(s);
    }
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    if (n != o.n) throw DimensionMismatchError("exponent vector length mismatch");
    ExponentVector r = *this;
    for (int i = 0; i < n; ++i) {
        if (o.e[static_cast<std::size_t>(i)] > r.e[static_cast<std::size_t>(i)])
            throw Error("exponent vector subtraction underflow");
        r.e[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>(r.e[static_cast<std::size_t>(i)] - o.e[static_cast<std::size_t>(i)]);
    }
    return r;
}

bool ExponentVector::divides(const ExponentVector& o) const {
    if (n != o.n) throw DimensionMismatchError("exponent vector length mismatch");
    for (int i = 0; i < n; ++i)
        if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
    return true;
}

ExponentVector ExponentVector::lcm(const ExponentVector& a, const ExponentVector& b) {
    if (a.n != b.n) throw DimensionMismatchError("exponent vector length mismatch");
    ExponentVector r = a;
    for (int i = 0; i < a.n; ++i)
        r.e[static_cast<std::size_t>(i)] =
            std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
    return r;
}

bool ExponentVector::coprime_with(const ExponentVector& o) const {
    for (int i = 0; i < n; ++i)
        if (e[static_cast<std::size_t>(i)] && o.e[static_cast<std::size_t>(i)]) return false;
    return true;
}

PolynomialRing::PolynomialRing(std::vector<std::string> variables, CoeffField field) {
    if (variables.size() > ExponentVector::kMaxVars)
        throw Error("too many ring variables (max " + std::to_string(ExponentVector::kMaxVars) + ")");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw Error("empty variable name");
        if (!seen.insert(v).second) throw Error("duplicate variable name: " + v);
        if (field.kind == CoeffKind::RationalFunction && v == field.param)
            throw Error("ring variable shadows coefficient-field parameter: " + v);
    }
    auto impl = std::make_shared<Impl>();
    impl->vars = std::move(variables);
    impl->field = std::move(field);
    impl_ = std::move(impl);
}

int PolynomialRing::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw UnknownVariableError("unknown variable: " + name);
    return *i;
}

std::optional<int> PolynomialRing::find(const std::string& name) const {
    for (std::size_t i = 0; i < impl_->vars.size(); ++i)
        if (impl_->vars[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

Scalar PolynomialRing::coerce(const Scalar& s) const {
    if (impl_->field.kind == CoeffKind::Rational) {
        return Scalar(s.as_rational()); // throws if genuinely a function
    }
    return Scalar(s.as_ratfunc(impl_->field.param));
}

bool PolynomialRing::operator==(const PolynomialRing& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    return impl_->vars == o.impl_->vars && impl_->field == o.impl_->field;
}

} // namespace repvar
