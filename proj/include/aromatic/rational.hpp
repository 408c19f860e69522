#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace aromatic {

using Rat = mpq_class;

/// Parse "p/q" or "p" into an exact rational. Throws std::invalid_argument
/// on malformed input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

/// Render as "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline mpz_class factorial(unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace aromatic
