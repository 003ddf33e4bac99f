#include "repvar/forms.hpp"

#include <bit>
#include <sstream>

namespace repvar {

int mask_degree(IndexMask k) { return std::popcount(k); }

std::string mask_to_string(IndexMask k) {
    std::string s = "{";
    for (int i = 0; i < 16; ++i)
        if (k & (IndexMask(1) << i)) s += std::to_string(i + 1);
    s += "}";
    return s;
}

int insertion_sign(int a, IndexMask b) {
    // count set bits of b below position a
    IndexMask below = static_cast<IndexMask>(b & ((IndexMask(1) << a) - 1));
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

DifferentialForm::DifferentialForm(PolynomialRing ring, int degree)
    : ring_(std::move(ring)), degree_(degree) {
    if (degree < 0) throw Error("negative form degree");
}

void DifferentialForm::insert(IndexMask k, Polynomial p) {
    if (p.is_zero()) return;
    auto it = comps_.find(k);
    if (it == comps_.end()) {
        comps_.emplace(k, std::move(p));
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

DifferentialForm DifferentialForm::from_polynomial(const Polynomial& p) {
    DifferentialForm f(p.ring(), 0);
    f.insert(0, p);
    return f;
}

DifferentialForm DifferentialForm::monomial_form(const Polynomial& p, IndexMask k) {
    if (mask_degree(k) > p.ring().nvars())
        throw Error("form degree exceeds variable count");
    DifferentialForm f(p.ring(), mask_degree(k));
    f.insert(k, p);
    return f;
}

Polynomial DifferentialForm::component(IndexMask k) const {
    auto it = comps_.find(k);
    if (it == comps_.end()) return Polynomial::zero(ring_);
    return it->second;
}

namespace {
void check_same(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("forms over different rings");
    if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
        throw Error("form degree mismatch in addition");
}
} // namespace

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    check_same(*this, o);
    DifferentialForm r(ring_, is_zero() ? o.degree_ : degree_);
    r.comps_ = comps_;
    for (const auto& [k, p] : o.comps_) r.insert(k, p);
    return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(*this);
    for (auto& [k, p] : r.comps_) p = -p;
    return r;
}

DifferentialForm DifferentialForm::operator*(const Scalar& c) const {
    DifferentialForm r(ring_, degree_);
    for (const auto& [k, p] : comps_) r.insert(k, p * c);
    return r;
}

DifferentialForm DifferentialForm::operator*(const Polynomial& q) const {
    DifferentialForm r(ring_, degree_);
    for (const auto& [k, p] : comps_) r.insert(k, p * q);
    return r;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
    if (ring_ != o.ring_) return false;
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && comps_ == o.comps_;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    if (a.ring() != b.ring()) throw RingMismatchError("wedge of forms over different rings");
    DifferentialForm r(a.ring(), a.degree() + b.degree());
    if (r.degree() > a.ring().nvars()) return DifferentialForm(a.ring(), r.degree());
    for (const auto& [ka, pa] : a.comps_) {
        for (const auto& [kb, pb] : b.comps_) {
            if (ka & kb) continue; // repeated index annihilates
            // Insert ka's factors into the sorted product one at a time,
            // highest index first; each crossing flips the sign.
            IndexMask acc = kb;
            int s = 1;
            for (int i = 15; i >= 0; --i) {
                if (!(ka & (IndexMask(1) << i))) continue;
                s *= insertion_sign(i, acc);
                acc = static_cast<IndexMask>(acc | (IndexMask(1) << i));
            }
            Polynomial prod = pa * pb;
            if (s < 0) prod = -prod;
            r.insert(static_cast<IndexMask>(ka | kb), std::move(prod));
        }
    }
    return r;
}

DifferentialForm exterior_d(const DifferentialForm& a) {
    DifferentialForm r(a.ring(), a.degree() + 1);
    const int n = a.ring().nvars();
    for (const auto& [k, p] : a.comps_) {
        for (int v = 0; v < n; ++v) {
            IndexMask bit = static_cast<IndexMask>(IndexMask(1) << v);
            if (k & bit) continue;
            Polynomial dp = p.partial_derivative(a.ring().variable(v));
            if (dp.is_zero()) continue;
            int sign = insertion_sign(v, k);
            r.insert(static_cast<IndexMask>(k | bit), sign < 0 ? -dp : dp);
        }
    }
    return r;
}

DifferentialForm p_iso(const Polynomial& p) {
    const int n = p.ring().nvars();
    IndexMask all = static_cast<IndexMask>((IndexMask(1) << n) - 1);
    return DifferentialForm::monomial_form(p, all);
}

Polynomial p_iso_inv(const DifferentialForm& top) {
    const int n = top.ring().nvars();
    if (top.is_zero()) return Polynomial::zero(top.ring());
    if (top.degree() != n) throw Error("p_iso_inv requires a top-degree form");
    IndexMask all = static_cast<IndexMask>((IndexMask(1) << n) - 1);
    return top.component(all);
}

std::string DifferentialForm::to_string() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : comps_) {
        std::string ps = p.to_string();
        bool neg = !ps.empty() && ps[0] == '-';
        bool multi = p.term_count() > 1;
        if (first) {
            first = false;
            if (multi && k != 0) {
                os << "(" << ps << ")";
            } else {
                os << ps;
            }
        } else {
            if (multi && k != 0) {
                os << " + (" << ps << ")";
            } else if (neg) {
                os << " - " << ps.substr(1);
            } else {
                os << " + " << ps;
            }
        }
        if (k != 0) os << " dx" << mask_to_string(k);
    }
    return os.str();
}

} // namespace repvar
