/**
 * rational.hpp
 * Exact rational scalars: arbitrary-precision rationals stored in lowest
 * terms with positive denominator, plus string parsing/serialization in
 * the "p/q" form (integer shorthand allowed).
 */
#ifndef GPTLAB_RATIONAL_HPP
#define GPTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gptlab {

/** Exact rational number. Canonical (lowest terms, denominator > 0). */
using Rat = mpq_class;

/** Build a canonical rational from machine integers. */
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/**
 * Parse "p/q" or integer shorthand "p". Whitespace is not accepted.
 * Throws std::invalid_argument on malformed input or zero denominator.
 */
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
    // mpz string constructors reject an explicit leading '+'.
    auto strip_plus = [](const std::string& t) { return t[0] == '+' ? t.substr(1) : t; };
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

/** Serialize canonically: "p/q", or "p" when the denominator is 1. */
inline std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline double rat_dbl(const Rat& x) { return x.get_d(); }

inline int rat_sign(const Rat& x) { return sgn(x); }

}  // namespace gptlab

#endif
