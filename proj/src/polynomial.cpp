#include "repvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace repvar {

bool deglex_greater(const ExponentVector& a, const ExponentVector& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return deglex_greater(x.mono, y.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

Polynomial Polynomial::constant(const PolynomialRing& ring, const Scalar& c) {
    Polynomial p(ring);
    Scalar cc = ring.coerce(c);
    if (!cc.is_zero()) p.terms_.push_back({ExponentVector::zero(ring.nvars()), cc});
    return p;
}

Polynomial Polynomial::variable(const PolynomialRing& ring, const std::string& name) {
    int i = ring.index_of(name);
    ExponentVector m = ExponentVector::zero(ring.nvars());
    m.set(i, 1);
    return monomial(ring, m, Scalar(1));
}

Polynomial Polynomial::monomial(const PolynomialRing& ring, const ExponentVector& m, const Scalar& c) {
    if (m.size() != ring.nvars()) throw DimensionMismatchError("monomial length != variable count");
    Polynomial p(ring);
    Scalar cc = ring.coerce(c);
    if (!cc.is_zero()) p.terms_.push_back({m, cc});
    return p;
}

Polynomial Polynomial::from_terms(const PolynomialRing& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    for (auto& t : terms) {
        if (t.mono.size() != ring.nvars())
            throw DimensionMismatchError("term monomial length != variable count");
        t.coeff = ring.coerce(t.coeff);
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_zero());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_zero() && terms_[0].coeff.is_one();
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

long Polynomial::degree_in(const std::string& var) const {
    int i = ring_.index_of(var);
    long d = 0;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono[i]);
    return d;
}

Scalar Polynomial::coeff_of(const ExponentVector& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar(0);
}

namespace {
void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("polynomials over different rings");
}
} // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    // merge of two descending-sorted term vectors
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Scalar c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        } else if (deglex_greater(terms_[i].mono, o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Scalar cc = ring_.coerce(c);
    if (cc.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = t.coeff * cc;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    if (is_zero() || o.is_zero()) return Polynomial(ring_);
    std::unordered_map<ExponentVector, Scalar, ExponentVectorHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            ExponentVector m = a.mono + b.mono;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, a.coeff * b.coeff);
            else
                it->second = it->second + a.coeff * b.coeff;
        }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) { return deglex_greater(x.mono, y.mono); });
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::one(ring_);
    Polynomial base(*this);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

const Term& Polynomial::leading_term(const MatrixMonomialOrder& order) const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

const Term& Polynomial::leading_term_deglex() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_[0];
}

Polynomial Polynomial::partial_derivative(const std::string& var) const {
    int i = ring_.index_of(var);
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        int e = t.mono[i];
        if (e == 0) continue;
        ExponentVector m = t.mono;
        m.set(i, e - 1);
        r.terms_.push_back({m, t.coeff * Scalar(static_cast<long>(e))});
    }
    r.normalize();
    return r;
}

Scalar Polynomial::eval(const std::map<std::string, Scalar>& point) const {
    std::vector<Scalar> vals;
    vals.reserve(static_cast<std::size_t>(ring_.nvars()));
    for (const auto& v : ring_.variables()) {
        auto it = point.find(v);
        if (it == point.end()) throw MissingAssignmentError("no value assigned to variable " + v);
        vals.push_back(ring_.coerce(it->second));
    }
    Scalar acc(0);
    for (const auto& t : terms_) {
        Scalar term = t.coeff;
        for (int i = 0; i < ring_.nvars(); ++i) {
            for (int k = 0; k < t.mono[i]; ++k) term = term * vals[static_cast<std::size_t>(i)];
        }
        acc = acc + term;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::string& var, const Scalar& value) const {
    int i = ring_.index_of(var);
    Scalar v = ring_.coerce(value);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt = t;
        int e = t.mono[i];
        if (e > 0) {
            Scalar p(1);
            for (int k = 0; k < e; ++k) p = p * v;
            nt.coeff = nt.coeff * p;
            nt.mono.set(i, 0);
        }
        out.push_back(std::move(nt));
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
    check_same_ring(*this, value);
    int i = ring_.index_of(var);
    Polynomial acc(ring_);
    for (const auto& t : terms_) {
        ExponentVector m = t.mono;
        int e = m[i];
        m.set(i, 0);
        Polynomial piece = Polynomial::monomial(ring_, m, t.coeff);
        if (e > 0) piece = piece * value.pow(static_cast<unsigned>(e));
        acc = acc + piece;
    }
    return acc;
}

Polynomial Polynomial::map_to(const PolynomialRing& target,
                              const std::map<std::string, std::string>& rename) const {
    std::vector<int> idx(static_cast<std::size_t>(ring_.nvars()), -1);
    for (int i = 0; i < ring_.nvars(); ++i) {
        std::string name = ring_.variable(i);
        auto it = rename.find(name);
        if (it != rename.end()) name = it->second;
        auto j = target.find(name);
        if (j) idx[static_cast<std::size_t>(i)] = *j;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        ExponentVector m = ExponentVector::zero(target.nvars());
        for (int i = 0; i < ring_.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (idx[static_cast<std::size_t>(i)] < 0)
                throw UnknownVariableError("variable " + ring_.variable(i) +
                                           " does not exist in target ring");
            m.set(idx[static_cast<std::size_t>(i)], t.mono[i]);
        }
        out.push_back({m, target.coerce(t.coeff)});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    if (ring_.field().kind != CoeffKind::Rational)
        throw Error("primitive part requires rational coefficients");
    mpz_class den_lcm(1);
    for (const auto& t : terms_) {
        mpz_class d = t.coeff.as_rational().get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class num_gcd(0);
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.as_rational().get_num() * den_lcm / t.coeff.as_rational().get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale = Rat(den_lcm) / Rat(num_gcd);
    Polynomial r = *this * Scalar(scale);
    if (sgn(r.terms_[0].coeff.as_rational()) < 0) r = -r;
    return r;
}

std::vector<Term> Polynomial::terms_sorted(const MatrixMonomialOrder& order) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [&](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
    return out;
}

namespace {
// A scalar whose text is a sum (e.g. a polynomial coefficient field element)
// must be parenthesized inside a term.
bool is_compound_scalar_text(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if ((c == '+' || c == '-') && i > 0 && depth == 0) return true;
    }
    return false;
}

std::string term_to_string(const PolynomialRing& ring, const Term& t, bool leading) {
    std::ostringstream os;
    std::string cs = t.coeff.to_string();
    if (is_compound_scalar_text(cs)) {
        os << (leading ? "" : " + ") << "(" << cs << ")";
        if (!t.mono.is_zero()) {
            os << "*";
            bool first = true;
            for (int i = 0; i < ring.nvars(); ++i) {
                int e = t.mono[i];
                if (e == 0) continue;
                if (!first) os << "*";
                first = false;
                os << ring.variable(i);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }
    bool negative = !cs.empty() && cs[0] == '-';
    std::string abs_cs = negative ? cs.substr(1) : cs;
    if (leading) {
        if (negative) os << "-";
    } else {
        os << (negative ? " - " : " + ");
    }
    bool has_vars = !t.mono.is_zero();
    if (!has_vars) {
        os << abs_cs;
        return os.str();
    }
    if (abs_cs != "1") os << abs_cs << "*";
    bool first = true;
    for (int i = 0; i < ring.nvars(); ++i) {
        int e = t.mono[i];
        if (e == 0) continue;
        if (!first) os << "*";
        first = false;
        os << ring.variable(i);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}
} // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        os << term_to_string(ring_, terms_[i], i == 0);
    return os.str();
}

std::string Polynomial::to_string(const MatrixMonomialOrder& order) const {
    if (terms_.empty()) return "0";
    auto sorted = terms_sorted(order);
    std::ostringstream os;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        os << term_to_string(ring_, sorted[i], i == 0);
    return os.str();
}

// ---------------- parser ----------------

namespace {
struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

Rat parse_number(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.i;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
    if (lx.i == start) throw ParseError("expected number", start);
    std::string num = lx.s.substr(start, lx.i - start);
    if (lx.i < lx.s.size() && lx.s[lx.i] == '/') {
        ++lx.i;
        std::size_t dstart = lx.i;
        while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) ++lx.i;
        if (lx.i == dstart) throw ParseError("expected denominator", dstart);
        num += "/" + lx.s.substr(dstart, lx.i - dstart);
    }
    auto r = rat_from_string(num);
    if (!r) throw ParseError("malformed rational " + num, start);
    return *r;
}

std::string parse_ident(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.i;
    while (lx.i < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
        ++lx.i;
    if (lx.i == start) throw ParseError("expected identifier", start);
    return lx.s.substr(start, lx.i - start);
}
} // namespace

Polynomial poly_parse(const std::string& text, const PolynomialRing& ring) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool first_term = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -1;
            ++lx.i;
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms", lx.i);
        }
        first_term = false;
        // one term: factors joined by '*'
        Rat coeff(sign);
        ExponentVector mono = ExponentVector::zero(ring.nvars());
        bool any_factor = false;
        while (true) {
            char f = lx.peek();
            std::size_t fpos = lx.i;
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff *= parse_number(lx);
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::string name = parse_ident(lx);
                auto vi = ring.find(name);
                if (!vi) throw ParseError("unknown variable " + name, fpos);
                int exp = 1;
                if (lx.peek() == '^') {
                    ++lx.i;
                    Rat e = parse_number(lx);
                    if (!is_integer(e) || sgn(e) < 0)
                        throw ParseError("exponent must be a nonnegative integer", fpos);
                    exp = static_cast<int>(e.get_num().get_si());
                }
                mono.set(*vi, mono[*vi] + exp);
                any_factor = true;
            } else {
                throw ParseError(std::string("unexpected character '") + f + "'", lx.i);
            }
            if (lx.peek() == '*') {
                ++lx.i;
                continue;
            }
            break;
        }
        if (!any_factor) throw ParseError("empty term", lx.i);
        terms.push_back({mono, Scalar(coeff)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace repvar
