#include "repvar/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace repvar {

UniPoly::UniPoly(std::string var, std::vector<Rat> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const std::string& var, const Rat& c) {
    return UniPoly(var, {c});
}

UniPoly UniPoly::variable(const std::string& var) {
    return UniPoly(var, {Rat(0), Rat(1)});
}

UniPoly UniPoly::monomial(const std::string& var, const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return UniPoly(var, std::move(v));
}

const Rat& UniPoly::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const Rat& UniPoly::leading_coeff() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

namespace {
// Constants bind to either variable name; otherwise names must agree.
std::string join_var(const UniPoly& a, const UniPoly& b) {
    if (a.is_constant()) return b.var();
    if (b.is_constant()) return a.var();
    if (a.var() != b.var())
        throw Error("univariate variable mismatch: " + a.var() + " vs " + b.var());
    return a.var();
}
} // namespace

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::string v = join_var(*this, o);
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UniPoly(v, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    std::string v = join_var(*this, o);
    if (is_zero() || o.is_zero()) return UniPoly(v);
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return UniPoly(v, std::move(out));
}

UniPoly UniPoly::operator*(const Rat& k) const {
    UniPoly r(*this);
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    if (!is_constant() && !o.is_constant() && var_ != o.var_) return false;
    return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw Error("univariate division by zero");
    std::string v = join_var(*this, d);
    UniPoly q(v), r(*this);
    r.var_ = v;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat c = r.leading_coeff() / d.leading_coeff();
        UniPoly m = UniPoly::monomial(v, c, k);
        q = q + m;
        r = r - m * d;
    }
    return {q, r};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(var_);
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(var_, std::move(out));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::pow(unsigned k) const {
    UniPoly r = UniPoly::constant(var_, 1);
    UniPoly base(*this);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading_coeff());
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& c : c_) {
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    UniPoly scaled = *this * Rat(den_lcm);
    for (const auto& c : scaled.c_) {
        mpz_class n = c.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd != 0) scaled = scaled * Rat(Rat(1) / Rat(num_gcd));
    if (sgn(scaled.leading_coeff()) < 0) scaled = -scaled;
    return scaled;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.is_zero() ? x : x.monic();
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? "-" : "+");
        }
        bool unit = (a == 1);
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (!unit) os << rat_to_string(a) << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------- RatFunc ----------------

RatFunc::RatFunc(const Rat& c, const std::string& var)
    : num_(UniPoly::constant(var, c)), den_(UniPoly::constant(var, 1)) {
    if (c == 0) num_ = UniPoly(var);
}

RatFunc::RatFunc(UniPoly num) : num_(std::move(num)) {
    den_ = UniPoly::constant(num_.var(), 1);
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(den_.var(), 1);
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw Error("rational function is not constant");
    if (num_.is_zero()) return Rat(0);
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw Error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) {
        UniPoly scaled = num_ * (Rat(1) / den_.coeff(0));
        return scaled.to_string();
    }
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    return "(" + n + ")/(" + d + ")";
}

} // namespace repvar
