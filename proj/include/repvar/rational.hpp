#ifndef REPVAR_RATIONAL_HPP
#define REPVAR_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <string>

namespace repvar {

// Arbitrary-precision rational. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Canonical text: "p" or "p/q" in lowest terms.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; returns nullopt on malformed input.
std::optional<Rat> rat_from_string(const std::string& s);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact square root if r is a perfect square of a rational; nullopt otherwise.
std::optional<Rat> rat_sqrt(const Rat& r);

} // namespace repvar

#endif
