#pragma once

#include <gmpxx.h>

#include <string>

#include "hookharm/errors.hpp"

namespace hh {

// Exact rational scalar.  mpq_class keeps the spec invariants for us:
// gcd(num, den) == 1 and den > 0 after canonicalize().
using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
    if (d == 0) fail(err::DivisionByZero, "rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_parse(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(err::ParseError, "bad rational literal: " + s);
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Throws unless r is an integer that fits in long.
inline long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r)) fail(err::NotInteger, "expected integer, got " + rat_str(r));
    if (!r.get_num().fits_slong_p()) fail(err::OutOfRange, "integer too large: " + rat_str(r));
    return r.get_num().get_si();
}

} // namespace hh
