#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "mton/error.hpp"

namespace mton {

/// Exact rational scalar. mpq_class keeps values canonical (den > 0, gcd 1)
/// as long as every mutation goes through its arithmetic operators.
using BigRational = mpq_class;
using BigInteger = mpz_class;

inline BigRational rational(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigRational rational(const BigInteger& num, const BigInteger& den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInteger to_big(std::uint64_t v) {
  BigInteger z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const BigRational& q) { return q.get_str(); }

inline std::string to_string(const BigInteger& z) { return z.get_str(); }

/// Accepts "p", "-p", "p/q"; the result is reduced.
inline BigRational parse_rational(std::string_view text) {
  std::string s(text);
  BigRational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

inline BigInteger factorial(unsigned n) {
  BigInteger f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// (2n-1)!! = 1*3*...*(2n-1); equals 1 for n = 0.
inline BigInteger double_factorial_odd(unsigned n) {
  BigInteger f = 1;
  for (unsigned i = 1; i <= n; ++i) f *= 2 * i - 1;
  return f;
}

inline BigRational pow(const BigRational& base, unsigned e) {
  BigRational out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace mton
