#ifndef MIXNORM_RAVG_HPP
#define MIXNORM_RAVG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mixnorm/families.hpp"
#include "mixnorm/finvec.hpp"

namespace mixnorm {

// Divisor/count used by the successor clause. FirstElement averages the
// first m_1 = min M lower-level vectors; LiteralPaper uses m_{m_1} instead.
// FirstElement is the default: it is the reading under which the computed
// supports land in S_xi (the literal reading provably breaks that for
// xi = 1, M = {2,3,4,...}).
enum class RAConvention { FirstElement, LiteralPaper };

struct MTooShort : std::runtime_error {
  size_t required_length;
  MTooShort(size_t req, size_t got)
      : std::runtime_error("M too short: recursion needs at least " + std::to_string(req) +
                           " elements, got " + std::to_string(got)),
        required_length(req) {}
};

struct RAvg {
  FinVec vec;
  OrdinalNotation xi;
  std::vector<uint64_t> M;
  uint64_t n = 1;
};

// properties 1-3 of the hierarchy, evaluated on a computed average
struct RAvgProperties {
  bool convex = false;            // nonneg coordinates summing to 1
  bool coord_bound = false;       // coordinates <= 1/min M (for xi > 0)
  bool support_in_family = false; // supp in S_xi
  bool support_in_M = false;
  bool all() const { return convex && coord_bound && support_in_family && support_in_M; }
};

RAvg repeated_average(const OrdinalNotation& xi, const std::vector<uint64_t>& M, uint64_t n,
                      RAConvention conv = RAConvention::FirstElement);

// the first `count` averages xi_1^M .. xi_count^M; supports are successive
// and exhaust a prefix of M
std::vector<RAvg> repeated_average_seq(const OrdinalNotation& xi, const std::vector<uint64_t>& M,
                                       uint64_t count, RAConvention conv = RAConvention::FirstElement);

RAvgProperties ravg_properties(const RAvg& a);

struct ReindexCheck {
  bool equal = false;
  std::vector<uint64_t> m_prime;
  std::string mismatch;
};

// property 4: with M' = union of supp xi_{n_k}^M, xi_k^{M'} must equal
// xi_{n_k}^M coordinatewise
ReindexCheck stability_reindex(const OrdinalNotation& xi, const std::vector<uint64_t>& M,
                               const std::vector<uint64_t>& nk,
                               RAConvention conv = RAConvention::FirstElement);

}  // namespace mixnorm

#endif
