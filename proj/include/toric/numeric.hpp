#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toric {

// All arithmetic in this library is exact. Integers are arbitrary-precision
// GMP integers and every non-integral quantity is an exact rational; no
// floating point appears anywhere in the library or its interfaces.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int numer(const Rat& q) { return q.get_num(); }
inline Int denom(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Serializes as "p" for integers and "p/q" otherwise (canonical form, q > 0).
std::string rat_to_string(const Rat& q);

// Accepts exactly the strings produced by rat_to_string (optionally with a
// leading '-'). Anything else, in particular decimal or exponent notation,
// is rejected.
bool parse_rat(const std::string& s, Rat& out);

std::string vec_to_string(const IntVec& v);
std::string vec_to_string(const RatVec& v);

}  // namespace toric
