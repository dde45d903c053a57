#pragma once

#include <gmpxx.h>

#include <string>

#include "rsalg/errors.hpp"

namespace rsalg {

// Arbitrary-precision rational, always reduced, denominator positive.
// mpq_class keeps values canonical as long as inputs are canonical; the
// string constructor path below canonicalizes explicitly.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw division_by_zero("rational literal with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

} // namespace rsalg
