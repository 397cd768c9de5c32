#ifndef MIXNORM_RATIONAL_HPP
#define MIXNORM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mixnorm {

// Exact arbitrary-precision rational scalar. Every stored value in the
// library is one of these; no floating point enters any norm computation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a/b", "a", "-a/b". Whitespace is not tolerated.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// x^e for integer e; e < 0 requires x != 0.
inline Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  bool inv = e < 0;
  unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && x == 0) throw std::domain_error("rat_pow: 0 to negative power");
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  // powers of a canonical fraction stay coprime; sign still needs fixing when inverting
  return inv ? make_rat(den, num) : Rat(num, den);
}

inline Int int_pow(const Int& x, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace mixnorm

#endif
