// pmdcert: positive matching decompositions with exact certificates.
// SPDX-License-Identifier: Apache-2.0

#ifndef PMDCERT_RATIONAL_HPP
#define PMDCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace pmd {

// All certification arithmetic is exact; no floating point anywhere on a
// verification path.
using Rational = mpq_class;

// Parses "num", "-num" or "num/den" (den != 0); result is canonical.
Rational rational_from_string(const std::string& text);

// Canonical form, "num" when the denominator is 1, "num/den" otherwise.
std::string rational_to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& value) { return sgn(value); }

} // namespace pmd

#endif
