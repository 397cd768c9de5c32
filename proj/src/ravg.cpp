#include "mixnorm/ravg.hpp"

#include <algorithm>

namespace mixnorm {

namespace {

// Working view of M that records how far past the real elements the
// recursion reaches. Virtual elements continue with consecutive values,
// the minimal possible continuation, so the high-water mark is exactly the
// minimal required length.
struct MStream {
  const std::vector<uint64_t>& real;
  size_t pos = 0;
  size_t virtual_used = 0;

  explicit MStream(const std::vector<uint64_t>& m) : real(m) {}

  uint64_t peek(size_t ahead = 0) const {
    size_t i = pos + ahead;
    if (i < real.size()) return real[i];
    uint64_t last = real.empty() ? 1 : real.back();
    return last + (i - real.size()) + 1;
  }

  uint64_t take() {
    uint64_t v = peek();
    if (pos >= real.size()) ++virtual_used;
    ++pos;
    return v;
  }

  size_t consumed() const { return pos; }
  bool overran() const { return pos > real.size(); }
};

FinVec ra_one(const OrdinalNotation& xi, MStream& s, RAConvention conv);

// count successive averages of order xi, consuming the stream
std::vector<FinVec> ra_seq(const OrdinalNotation& xi, MStream& s, uint64_t count, RAConvention conv) {
  std::vector<FinVec> out;
  out.reserve(count);
  for (uint64_t i = 0; i < count; ++i) out.push_back(ra_one(xi, s, conv));
  return out;
}

FinVec ra_one(const OrdinalNotation& xi, MStream& s, RAConvention conv) {
  if (xi.is_zero()) return FinVec::unit_nat(s.take());
  if (xi.is_successor()) {
    uint64_t m1 = s.peek();
    uint64_t count = m1;
    if (conv == RAConvention::LiteralPaper) {
      // m_{m_1}: the m_1-th element of the remaining stream (1-based)
      count = s.peek(m1 - 1);
    }
    std::vector<FinVec> parts = ra_seq(xi.pred(), s, count, conv);
    FinVec sum;
    for (auto& p : parts) sum += p;
    sum *= Rat(1, Int(count));
    return sum;
  }
  // limit: order of the block is dictated by the minimum of the remaining stream
  uint64_t t = s.peek();
  uint32_t tt = t > 0xffffffffULL ? 0xffffffffU : static_cast<uint32_t>(t);
  return ra_one(xi.fundamental(tt), s, conv);
}

}  // namespace

std::vector<RAvg> repeated_average_seq(const OrdinalNotation& xi, const std::vector<uint64_t>& M,
                                       uint64_t count, RAConvention conv) {
  for (size_t i = 1; i < M.size(); ++i)
    if (M[i] <= M[i - 1]) throw std::invalid_argument("repeated_average: M must be strictly increasing");
  if (!M.empty() && M[0] == 0) throw std::invalid_argument("repeated_average: naturals start at 1");
  MStream s(M);
  std::vector<FinVec> vecs = ra_seq(xi, s, count, conv);
  if (s.overran()) throw MTooShort(s.consumed(), M.size());
  std::vector<RAvg> out;
  out.reserve(vecs.size());
  for (uint64_t i = 0; i < vecs.size(); ++i) out.push_back(RAvg{std::move(vecs[i]), xi, M, i + 1});
  return out;
}

RAvg repeated_average(const OrdinalNotation& xi, const std::vector<uint64_t>& M, uint64_t n,
                      RAConvention conv) {
  if (n == 0) throw std::invalid_argument("repeated_average: n starts at 1");
  auto seq = repeated_average_seq(xi, M, n, conv);
  return std::move(seq.back());
}

RAvgProperties ravg_properties(const RAvg& a) {
  RAvgProperties p;
  Rat sum(0);
  bool nonneg = true;
  Rat bound = a.M.empty() ? Rat(1) : Rat(1, Int(a.M.front()));
  bool coord_ok = true;
  std::vector<uint64_t> supp;
  for (auto& [i, v] : a.vec.entries()) {
    sum += v;
    if (v < 0) nonneg = false;
    if (a.xi > OrdinalNotation::fin(0) && v > bound) coord_ok = false;
    supp.push_back(i.nat());
  }
  p.convex = nonneg && sum == 1;
  p.coord_bound = coord_ok;
  p.support_in_family = family_member(supp, FamilyDescriptor::S(a.xi));
  p.support_in_M = std::includes(a.M.begin(), a.M.end(), supp.begin(), supp.end());
  return p;
}

ReindexCheck stability_reindex(const OrdinalNotation& xi, const std::vector<uint64_t>& M,
                               const std::vector<uint64_t>& nk, RAConvention conv) {
  ReindexCheck r;
  for (size_t i = 1; i < nk.size(); ++i)
    if (nk[i] <= nk[i - 1]) throw std::invalid_argument("stability_reindex: (n_k) must be strictly increasing");
  if (nk.empty()) {
    r.equal = true;
    return r;
  }
  auto base = repeated_average_seq(xi, M, nk.back(), conv);
  std::vector<const RAvg*> picked;
  for (uint64_t k : nk) picked.push_back(&base[k - 1]);
  for (auto* a : picked)
    for (auto& [i, v] : a->vec.entries()) r.m_prime.push_back(i.nat());
  std::sort(r.m_prime.begin(), r.m_prime.end());
  auto re = repeated_average_seq(xi, r.m_prime, nk.size(), conv);
  r.equal = true;
  for (size_t k = 0; k < nk.size(); ++k) {
    if (!(re[k].vec == picked[k]->vec)) {
      r.equal = false;
      r.mismatch = "xi_" + std::to_string(k + 1) + "^{M'} differs from xi_" + std::to_string(nk[k]) + "^M";
      break;
    }
  }
  return r;
}

}  // namespace mixnorm
