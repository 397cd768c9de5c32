#ifndef MIXNORM_MTNORM_HPP
#define MIXNORM_MTNORM_HPP

#include <cstdint>
#include <vector>

#include "mixnorm/cert.hpp"
#include "mixnorm/finvec.hpp"
#include "mixnorm/params.hpp"

namespace mixnorm {

// One block of a d-product vector as the norm engine sees it: its coordinate,
// its exact ground norm, and a norming functional attaining that value.
struct BlockView {
  uint64_t pos = 0;
  Rat ground_norm;
  FinVec functional;  // optimal ground functional (empty for externally-normed blocks)
};

// Exact mixed-Tsirelson norm over block ground values. This is the full
// engine: scalar vectors, enumerable ground layers and gauge-normed diagonal
// blocks all reduce to it. Deterministic; DP caches are scoped to the call.
NormResult mt_norm_blocks(std::vector<BlockView> blocks, const MTParams& params);

// Norm of a naturals-indexed vector under the params' ground layer.
// With the scalar ground this is the mixed-Tsirelson norm itself.
NormResult mt_norm(const FinVec& x, const MTParams& params);

// ground norm + optimal functional of one block under a ground layer
BlockView ground_block(uint64_t pos, const FinVec& block, const GroundLayer& g);

}  // namespace mixnorm

#endif
