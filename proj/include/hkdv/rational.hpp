#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkdv {

// Exact rational arithmetic, GMP-backed. mpq_class keeps values canonical
// (lowest terms, positive denominator) as long as construction goes through
// the helpers below; raw mpq_class(n, d) does NOT canonicalize on its own.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// 1/r!, with the convention 1/r! = 0 for r < 0.
inline Rat inv_factorial(long r) {
    if (r < 0) return Rat(0);
    return rat(Int(1), factorial(r));
}

// b^e for integer e of either sign; b must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (is_zero(base)) {
        if (e < 0) throw std::invalid_argument("rat_pow: zero base, negative exponent");
        return Rat(0);
    }
    Rat b = base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (e < 0) acc = Rat(1) / acc;
    return acc;
}

inline Int int_pow(long base, long e) {
    if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
    Int r(1);
    Int b(base);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Serialization per the wire format: "num/den", or "num" when den = 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace hkdv
