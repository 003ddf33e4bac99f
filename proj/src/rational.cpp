#include "repvar/rational.hpp"

namespace repvar {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    // validate: optional '-', digits, optional '/<digits>'
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        if (i == s.size()) return std::nullopt;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i != s.size()) return std::nullopt;
    }
    Rat r;
    if (r.set_str(s, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

} // namespace repvar
