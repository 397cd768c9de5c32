#include "mixnorm/powercmp.hpp"

#include <algorithm>
#include <cassert>

namespace mixnorm {

namespace {

Rat dyadic_down(const Rat& r, unsigned bits) {
  Int scale = int_pow(Int(2), bits);
  Rat scaled = r * Rat(scale);
  return Rat(rat_floor(scaled), scale);
}

Rat dyadic_up(const Rat& r, unsigned bits) {
  Int scale = int_pow(Int(2), bits);
  Rat scaled = r * Rat(scale);
  Int fl = rat_floor(scaled);
  if (Rat(fl) == scaled) return Rat(fl, scale);
  return Rat(fl + 1, scale);
}

RatBracket rounded(const Rat& lo, const Rat& hi, unsigned bits) {
  return RatBracket{dyadic_down(lo, bits + 8), dyadic_up(hi, bits + 8)};
}

// 2 * atanh(z) = ln((1+z)/(1-z)) for 0 <= z < 1, bracketed
RatBracket atanh2_bracket(const Rat& z, unsigned bits) {
  if (z == 0) return {Rat(0), Rat(0)};
  Rat z2 = z * z;
  Rat term = z;  // z^(2k+1)
  Rat sum(0);
  unsigned k = 0;
  // stop once the tail bound drops below 2^-(bits+4)
  Rat tol = Rat(1, int_pow(Int(2), bits + 4));
  Rat tail;
  while (true) {
    sum += term / Rat(2 * k + 1);
    term *= z2;
    ++k;
    // tail <= z^(2k+1) / ((2k+1)(1-z^2))
    tail = term / (Rat(2 * k + 1) * (Rat(1) - z2));
    if (tail < tol) break;
  }
  return rounded(2 * sum, 2 * (sum + tail), bits);
}

const RatBracket& ln2_bracket(unsigned bits) {
  static thread_local unsigned cached_bits = 0;
  static thread_local RatBracket cached;
  if (cached_bits < bits) {
    cached = atanh2_bracket(Rat(1, 3), bits);
    cached_bits = bits;
  }
  return cached;
}

// floor(log2 x) for x > 0
long floor_log2(const Rat& x) {
  long guess = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  // adjust: want 2^g <= x < 2^(g+1)
  while (rat_pow(Rat(2), guess) > x) --guess;
  while (rat_pow(Rat(2), guess + 1) <= x) ++guess;
  return guess;
}

}  // namespace

RatBracket ln_bracket(const Rat& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("ln_bracket: nonpositive argument");
  if (x == 1) return {Rat(0), Rat(0)};
  if (x < 1) {
    RatBracket b = ln_bracket(Rat(1) / x, bits);
    return {-b.hi, -b.lo};
  }
  long t = floor_log2(x);
  Rat u = x / rat_pow(Rat(2), t);  // in [1,2)
  RatBracket lu = atanh2_bracket((u - 1) / (u + 1), bits);
  if (t == 0) return lu;
  RatBracket l2 = ln2_bracket(bits + 8);
  Rat tl = Rat(t);
  return rounded(lu.lo + tl * l2.lo, lu.hi + tl * l2.hi, bits);
}

namespace {

// e^y for a single rational y, outward-rounded
RatBracket exp_point(const Rat& y, unsigned bits) {
  if (y == 0) return {Rat(1), Rat(1)};
  if (y < 0) {
    RatBracket b = exp_point(-y, bits + 4);
    return rounded(Rat(1) / b.hi, Rat(1) / b.lo, bits);
  }
  // reduce so the series argument is <= 1/2
  unsigned s = 0;
  Rat w = y;
  while (w > Rat(1, 2)) {
    w /= 2;
    ++s;
  }
  Rat term(1), sum(1);
  unsigned k = 1;
  Rat tol = Rat(1, int_pow(Int(2), bits + 8 + 2 * s));
  Rat tail;
  while (true) {
    term *= w / Rat(k);
    sum += term;
    ++k;
    // tail <= term * w / k * 1/(1 - w/k) <= 2 * term * w / k for k >= 1, w <= 1/2
    tail = 2 * term * w / Rat(k);
    if (tail < tol) break;
  }
  Rat lo = sum, hi = sum + tail;
  for (unsigned i = 0; i < s; ++i) {
    lo = lo * lo;
    hi = hi * hi;
    lo = dyadic_down(lo, bits + 8 + 2 * (s - i));
    hi = dyadic_up(hi, bits + 8 + 2 * (s - i));
  }
  return rounded(lo, hi, bits);
}

}  // namespace

RatBracket exp_bracket(const RatBracket& y, unsigned bits) {
  RatBracket lo = exp_point(y.lo, bits);
  RatBracket hi = exp_point(y.hi, bits);
  return {lo.lo, hi.hi};
}

std::pair<Int, unsigned long> primitive_root(const Int& x) {
  if (x < 2) throw std::domain_error("primitive_root: argument must be >= 2");
  unsigned long maxe = mpz_sizeinbase(x.get_mpz_t(), 2);
  for (unsigned long e = maxe; e >= 2; --e) {
    Int r;
    if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), e) != 0) return {r, e};
  }
  return {x, 1};
}

std::optional<Rat> log_rational(const Int& m, const Int& n) {
  auto [rm, em] = primitive_root(m);
  auto [rn, en] = primitive_root(n);
  if (rm != rn) return std::nullopt;
  return make_rat(Int(em), Int(en));
}

int cmp_log(const Int& m, const Int& n, const Rat& q) {
  if (m < 2 || n < 2) throw std::domain_error("cmp_log: bases must be >= 2");
  if (q <= 0) return 1;  // log_n m > 0
  const Int& a = q.get_num();
  const Int& b = q.get_den();
  if (!a.fits_ulong_p() || !b.fits_ulong_p())
    throw std::domain_error("cmp_log: comparison exponent too large");
  Int lhs = int_pow(m, b.get_ui());
  Int rhs = int_pow(n, a.get_ui());
  return ::cmp(lhs, rhs);
}

RatBracket pow_bracket(const Rat& x, const Rat& e, unsigned bits) {
  if (x <= 0) {
    if (x == 0 && e > 0) return {Rat(0), Rat(0)};
    throw std::domain_error("pow_bracket: need positive base");
  }
  if (rat_is_integer(e)) {
    if (!e.get_num().fits_slong_p()) throw std::domain_error("pow_bracket: exponent too large");
    Rat v = rat_pow(x, e.get_num().get_si());
    return {v, v};
  }
  // exact when x^num is a perfect den-th power
  const Int& a = e.get_num();
  const Int& b = e.get_den();
  if (a.fits_slong_p() && b.fits_ulong_p() && b.get_ui() <= 64) {
    Rat xa = rat_pow(x, a.get_si());
    Int rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), xa.get_num_mpz_t(), b.get_ui()) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), xa.get_den_mpz_t(), b.get_ui()) != 0;
    if (en && ed) {
      Rat v(rn, rd);
      return {v, v};
    }
  }
  RatBracket l = ln_bracket(x, bits + 8);
  RatBracket el{e * l.lo, e * l.hi};
  if (e < 0) std::swap(el.lo, el.hi);
  return exp_bracket(el, bits);
}

PExponent PExponent::rational(Rat p) {
  if (p < 1) throw std::domain_error("PExponent: p must be >= 1");
  PExponent e;
  e.rational_ = true;
  e.q_ = std::move(p);
  return e;
}

PExponent PExponent::one_over_one_minus_log(Int m, Int n) {
  if (m < 2 || n <= m) throw std::domain_error("PExponent: need 2 <= m < n");
  if (auto lr = log_rational(m, n)) {
    // p = 1/(1 - a/b) = b/(b-a)
    return rational(Rat(lr->get_den(), lr->get_den() - lr->get_num()));
  }
  PExponent e;
  e.rational_ = false;
  e.m_ = std::move(m);
  e.n_ = std::move(n);
  return e;
}

const Rat& PExponent::rational_value() const {
  if (!rational_) throw std::logic_error("PExponent: irrational");
  return q_;
}

int PExponent::cmp(const Rat& q) const {
  if (rational_) return ::cmp(q_, q);
  if (q <= 1) return 1;  // log form is > 1
  // 1/(1-L) vs q  <=>  L vs (q-1)/q
  return cmp_log(m_, n_, (q - 1) / q);
}

RatBracket PExponent::bracket(unsigned bits) const {
  if (rational_) return {q_, q_};
  unsigned work = bits + 16;
  for (;;) {
    RatBracket lm = ln_bracket(Rat(m_), work);
    RatBracket ln = ln_bracket(Rat(n_), work);
    RatBracket L{lm.lo / ln.hi, lm.hi / ln.lo};
    if (L.hi < 1) {
      // p = 1/(1-L), increasing in L
      return {Rat(1) / (Rat(1) - L.lo), Rat(1) / (Rat(1) - L.hi)};
    }
    work *= 2;
    if (work > 1u << 20) throw PrecisionExhausted(work);
  }
}

std::string PExponent::str() const {
  if (rational_) return rat_str(q_);
  return "1/(1-log_" + n_.get_str() + "(" + m_.get_str() + "))";
}

std::optional<int> PExponent::cmp(const PExponent& a, const PExponent& b, unsigned max_bits) {
  if (a.rational_ && b.rational_) return ::cmp(a.q_, b.q_);
  if (a.rational_) return -b.cmp(a.q_);
  if (b.rational_) return a.cmp(b.q_);
  if (a.m_ == b.m_ && a.n_ == b.n_) return 0;  // symbolic forms are canonical
  for (unsigned bits = 32; bits <= max_bits; bits *= 2) {
    RatBracket ba = a.bracket(bits), bb = b.bracket(bits);
    if (ba.hi < bb.lo) return -1;
    if (bb.hi < ba.lo) return 1;
  }
  return std::nullopt;
}

namespace {

// r vs t * k^(1/p) with p = 1/(1 - log_n m): exact when k is a power of n,
// since then k^(1/p) = (n/m)^j.
std::optional<int> cmp_uniform_logform(const Rat& r, const Rat& t, unsigned long k, const Int& m, const Int& n) {
  Int pw(1);
  unsigned long j = 0;
  while (pw < k) {
    pw *= n;
    ++j;
  }
  if (pw != k) return std::nullopt;
  Rat bound = t * Rat(int_pow(n, j), int_pow(m, j));
  return ::cmp(r, bound);
}

}  // namespace

RatBracket lp_norm_bracket(const std::vector<Rat>& terms, const PExponent& p, unsigned bits) {
  std::vector<Rat> ts;
  for (auto& t : terms) {
    if (t < 0) throw std::domain_error("lp_norm_bracket: terms must be absolute values");
    if (t > 0) ts.push_back(t);
  }
  if (ts.empty()) return {Rat(0), Rat(0)};
  RatBracket pb = p.bracket(bits + 16);
  Rat slo(0), shi(0);
  for (auto& t : ts) {
    // t^p monotone in p: increasing for t >= 1, decreasing for t < 1
    RatBracket e1 = pow_bracket(t, pb.lo, bits + 16);
    RatBracket e2 = pow_bracket(t, pb.hi, bits + 16);
    slo += std::min(e1.lo, e2.lo);
    shi += std::max(e1.hi, e2.hi);
  }
  // (sum)^(1/p): increasing in sum; for sum >= 1 decreasing in p, else increasing
  RatBracket inv{Rat(1) / pb.hi, Rat(1) / pb.lo};
  RatBracket r3 = pow_bracket(shi, inv.lo, bits + 8);
  RatBracket r4 = pow_bracket(shi, inv.hi, bits + 8);
  Rat hi = std::max(r3.hi, r4.hi);
  if (slo <= 0) return {Rat(0), hi};
  RatBracket r1 = pow_bracket(slo, inv.lo, bits + 8);
  RatBracket r2 = pow_bracket(slo, inv.hi, bits + 8);
  Rat lo = std::min(r1.lo, r2.lo);
  if (lo < 0) lo = 0;
  return {lo, hi};
}

std::optional<int> lp_norm_cmp(const Rat& r, const std::vector<Rat>& terms, const PExponent& p,
                               unsigned max_bits) {
  std::vector<Rat> ts;
  for (auto& t : terms) {
    if (t < 0) throw std::domain_error("lp_norm_cmp: terms must be absolute values");
    if (t > 0) ts.push_back(t);
  }
  if (ts.empty()) return ::cmp(r, Rat(0));
  if (r < 0) return -1;
  if (ts.size() == 1) return ::cmp(r, ts[0]);  // ||x||_p = t for a single term

  bool uniform = std::all_of(ts.begin(), ts.end(), [&](const Rat& t) { return t == ts[0]; });
  unsigned long k = ts.size();

  if (p.is_rational()) {
    const Rat& q = p.rational_value();
    const Int& a = q.get_num();
    const Int& b = q.get_den();
    if (!a.fits_slong_p()) throw std::domain_error("lp_norm_cmp: exponent too large");
    if (b == 1) {
      // integer p: r^p vs sum t^p, fully exact
      long e = a.get_si();
      Rat sum(0);
      for (auto& t : ts) sum += rat_pow(t, e);
      return ::cmp(rat_pow(r, e), sum);
    }
    if (uniform) {
      // r/t vs k^(b/a): (r/t)^a vs k^b, exact
      Rat u = r / ts[0];
      if (u <= 1) return -1;  // k >= 2 so bound = t*k^(1/p) > t >= r
      if (!b.fits_ulong_p()) throw std::domain_error("lp_norm_cmp: exponent too large");
      return ::cmp(rat_pow(u, a.get_si()), Rat(int_pow(Int(k), b.get_ui())));
    }
    // try the all-perfect-powers path: every t^a a perfect b-th power
    if (b.fits_ulong_p() && b.get_ui() <= 64) {
      bool all_exact = true;
      Rat sum(0);
      for (auto& t : ts) {
        RatBracket tb = pow_bracket(t, q, 64);
        if (!tb.exact()) {
          all_exact = false;
          break;
        }
        sum += tb.lo;
      }
      if (all_exact) {
        RatBracket rb = pow_bracket(r, q, 64);
        if (rb.exact()) return ::cmp(rb.lo, sum);
      }
    }
  } else if (uniform) {
    if (auto c = cmp_uniform_logform(r, ts[0], k, p.log_m(), p.log_n())) return c;
  }

  // interval refinement; truth here is generically strict
  for (unsigned bits = 32; bits <= max_bits; bits *= 2) {
    RatBracket nb = lp_norm_bracket(ts, p, bits);
    if (r < nb.lo) return -1;
    if (r > nb.hi) return 1;
  }
  return std::nullopt;
}

bool certify_le_lp(const Rat& r, const std::vector<Rat>& terms, const PExponent& p, unsigned max_bits) {
  auto c = lp_norm_cmp(r, terms, p, max_bits);
  if (!c) throw PrecisionExhausted(max_bits);
  return *c <= 0;
}

bool certify_lp_le(const std::vector<Rat>& terms, const PExponent& p, const Rat& r, unsigned max_bits) {
  auto c = lp_norm_cmp(r, terms, p, max_bits);
  if (!c) throw PrecisionExhausted(max_bits);
  return *c >= 0;
}

}  // namespace mixnorm
