#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace plethyra {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// mpq_class is kept canonical (gcd 1, positive denominator) by GMP itself,
// except when constructed from raw numerator/denominator pairs.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a", "-a" or "a/b". Whitespace is not accepted.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// "a/b" with b > 0 and gcd(a,b) = 1; plain "a" for integers.
inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline bool is_integer(const Rat& q) {
    return q.get_den() == 1;
}

}  // namespace plethyra
