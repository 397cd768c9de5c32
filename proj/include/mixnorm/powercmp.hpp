#ifndef MIXNORM_POWERCMP_HPP
#define MIXNORM_POWERCMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixnorm/rational.hpp"

namespace mixnorm {

// Rational bracket [lo, hi] enclosing a real value.
struct RatBracket {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
};

// ln x within 2^-bits, exact [0,0] for x = 1.
RatBracket ln_bracket(const Rat& x, unsigned bits);

// e^y for y inside a bracket, within relative 2^-bits.
RatBracket exp_bracket(const RatBracket& y, unsigned bits);

// x^e for rational exponent; exact when the root is rational.
RatBracket pow_bracket(const Rat& x, const Rat& e, unsigned bits);

// largest e with x = r^e (x >= 2), returned as (r, e)
std::pair<Int, unsigned long> primitive_root(const Int& x);

// log_n m when rational (m, n >= 2), i.e. when m and n share a primitive root
std::optional<Rat> log_rational(const Int& m, const Int& n);

// sign of log_n m - q, decided exactly via m^b vs n^a
int cmp_log(const Int& m, const Int& n, const Rat& q);

// Exponent for lp-type comparisons: an exact rational, or 1/(1 - log_n m)
// kept symbolic (never materialized) when that log is irrational.
class PExponent {
 public:
  static PExponent rational(Rat p);
  // p = 1/(1 - log_n m), requires 2 <= m < n; collapses to a rational
  // whenever m and n are powers of a common base
  static PExponent one_over_one_minus_log(Int m, Int n);

  bool is_rational() const { return rational_; }
  const Rat& rational_value() const;
  const Int& log_m() const { return m_; }
  const Int& log_n() const { return n_; }

  int cmp(const Rat& q) const;        // sign of p - q, always exact
  RatBracket bracket(unsigned bits) const;
  std::string str() const;

  // total comparison of two exponents; nullopt when two distinct symbolic
  // forms cannot be separated within the bit budget
  static std::optional<int> cmp(const PExponent& a, const PExponent& b, unsigned max_bits = 512);

 private:
  PExponent() = default;
  bool rational_ = true;
  Rat q_;
  Int m_, n_;
};

// exhausted precision budget in a certified comparison
struct PrecisionExhausted : std::runtime_error {
  unsigned bits_tried;
  explicit PrecisionExhausted(unsigned bits)
      : std::runtime_error("certified comparison undecided at precision budget (" + std::to_string(bits) +
                           " bits); raise the budget"),
        bits_tried(bits) {}
};

// Sign of r - (sum_i t_i^p)^(1/p) for r rational and t_i >= 0 rational.
// Exact (including 0) on the structured paths: integer p, perfect-power
// rational p, single or uniform terms under a log-form p with matching base.
// Otherwise decided by outward-rounded interval refinement up to max_bits;
// nullopt if still undecided there.
std::optional<int> lp_norm_cmp(const Rat& r, const std::vector<Rat>& terms, const PExponent& p,
                               unsigned max_bits = 2048);

// certified "r <= ||x||_p"; throws PrecisionExhausted when undecidable
bool certify_le_lp(const Rat& r, const std::vector<Rat>& terms, const PExponent& p, unsigned max_bits = 2048);
// certified "||x||_p <= r"
bool certify_lp_le(const std::vector<Rat>& terms, const PExponent& p, const Rat& r, unsigned max_bits = 2048);

// bracket of (sum t_i^p)^(1/p)
RatBracket lp_norm_bracket(const std::vector<Rat>& terms, const PExponent& p, unsigned bits);

}  // namespace mixnorm

#endif
