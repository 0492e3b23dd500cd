#pragma once

#include <gmpxx.h>

#include <string>

#include "gridcover/error.hpp"

namespace gridcover {

// Exact rational arithmetic, GMP-backed. mpq_class keeps values in lowest
// terms with positive denominator once canonicalized; every constructor path
// below canonicalizes, so Rat values are always canonical and operator==/<
// are exact numeric comparisons.
using Int = mpz_class;
using Rat = mpq_class;

// p/q in lowest terms; q may be negative or share factors with p.
Rat make_rat(const Int& p, const Int& q);
inline Rat make_rat(long p, long q = 1) { return make_rat(Int(p), Int(q)); }

// Accepts "p", "-p", "p/q" with decimal digits only. No whitespace, no signs
// on q, no empty parts.
Rat parse_rat(const std::string& s);

// "p" when q == 1, else "p/q".
std::string rat_str(const Rat& r);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);
bool is_integer(const Rat& r);

// Checked narrowing for counts that must fit a long.
long to_long(const Int& z);
inline long floor_long(const Rat& r) { return to_long(rat_floor(r)); }
inline long ceil_long(const Rat& r) { return to_long(rat_ceil(r)); }

// Largest integer s with s*s <= z (z >= 0).
Int isqrt(const Int& z);

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace gridcover
