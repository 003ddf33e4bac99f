#ifndef REPVAR_RING_HPP
#define REPVAR_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repvar/errors.hpp"
#include "repvar/scalar.hpp"

namespace repvar {

// Exponent vector of a monomial; one entry per ring variable.
struct ExponentVector {
    static constexpr int kMaxVars = 12;
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint8_t n = 0;

    static ExponentVector zero(int nvars) {
        ExponentVector v;
        v.n = static_cast<std::uint8_t>(nvars);
        return v;
    }

    int size() const { return n; }
    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    void set(int i, int val) { e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(val); }
    long total_degree() const {
        long d = 0;
        for (int i = 0; i < n; ++i) d += e[static_cast<std::size_t>(i)];
        return d;
    }
    bool is_zero() const {
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    bool operator==(const ExponentVector& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] != o.e[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    bool operator!=(const ExponentVector& o) const { return !(*this == o); }

    ExponentVector operator+(const ExponentVector& o) const;
    // Requires divisibility; throws otherwise.
    ExponentVector operator-(const ExponentVector& o) const;
    bool divides(const ExponentVector& o) const; // this | o
    static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
    bool coprime_with(const ExponentVector& o) const;

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < n; ++i) {
            h ^= e[static_cast<std::size_t>(i)];
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& v) const { return v.hash(); }
};

enum class CoeffKind { Rational, RationalFunction };

struct CoeffField {
    CoeffKind kind = CoeffKind::Rational;
    std::string param; // variable of the rational-function field
    static CoeffField rational() { return {CoeffKind::Rational, ""}; }
    static CoeffField rational_function(std::string var) {
        return {CoeffKind::RationalFunction, std::move(var)};
    }
    bool operator==(const CoeffField& o) const { return kind == o.kind && param == o.param; }
};

// Immutable: variable sequence and coefficient-field tag fixed at construction.
class PolynomialRing {
public:
    PolynomialRing() = default;
    PolynomialRing(std::vector<std::string> variables, CoeffField field = CoeffField::rational());

    int nvars() const { return static_cast<int>(impl_->vars.size()); }
    const std::vector<std::string>& variables() const { return impl_->vars; }
    const std::string& variable(int i) const { return impl_->vars[static_cast<std::size_t>(i)]; }
    const CoeffField& field() const { return impl_->field; }
    // Index of a variable name; throws UnknownVariableError if absent.
    int index_of(const std::string& name) const;
    std::optional<int> find(const std::string& name) const;

    // Coerce a scalar into this ring's coefficient field.
    Scalar coerce(const Scalar& s) const;

    bool operator==(const PolynomialRing& o) const;
    bool operator!=(const PolynomialRing& o) const { return !(*this == o); }

private:
    struct Impl {
        std::vector<std::string> vars;
        CoeffField field;
    };
    std::shared_ptr<const Impl> impl_;
};

} // namespace repvar

#endif
