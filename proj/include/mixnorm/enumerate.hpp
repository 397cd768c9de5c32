#ifndef MIXNORM_ENUMERATE_HPP
#define MIXNORM_ENUMERATE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixnorm/finvec.hpp"
#include "mixnorm/params.hpp"

namespace mixnorm {

struct EnumerationBudgetExceeded : std::runtime_error {
  size_t count_reached;
  explicit EnumerationBudgetExceeded(size_t n)
      : std::runtime_error("norming-set enumeration exceeded its budget after " + std::to_string(n) +
                           " functionals; no partial result is returned"),
        count_reached(n) {}
};

// Nonnegative representatives of K^depth over the window: the closure is
// invariant under per-coordinate sign flips, so one vector of absolute
// values stands for its whole sign orbit. Entry j of a row is the
// coefficient at coordinate window.lo + j.
std::vector<std::vector<Rat>> enumerate_norming_cone(const MTParams& params, const Interval& window,
                                                     unsigned depth, size_t budget = 2'000'000);

// The functionals of K^depth supported in the window, deduplicated
// (sign orbits expanded). Scalar ground only. All-or-nothing on budget.
std::vector<FinVec> enumerate_norming_set(const MTParams& params, const Interval& window, unsigned depth,
                                          size_t budget = 2'000'000);

}  // namespace mixnorm

#endif
