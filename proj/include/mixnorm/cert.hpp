#ifndef MIXNORM_CERT_HPP
#define MIXNORM_CERT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mixnorm/finvec.hpp"
#include "mixnorm/params.hpp"

namespace mixnorm {

// Certificate (analysis tree) of a norming functional. A leaf is a ground
// functional acting on one block position; an internal node with family
// index k stands for theta_k * (sum of its children), the children acting on
// successive ranges admissibly for family k.
class NormCert {
 public:
  struct Node {
    size_t family = 0;      // 0 = leaf, else 1-based index into the params
    uint64_t position = 0;  // leaf only: block coordinate
    FinVec functional;      // leaf only: ground functional over the block's index space
    Rat leaf_value;         // leaf only: exact value on the block it certifies
    std::vector<Node> children;

    bool is_leaf() const { return family == 0; }
  };

  Node root;
  bool zero = false;  // certificate of the zero vector

  // evaluation against a flat vector (scalar grounds: leaf functionals live
  // in the same index space as x)
  Rat eval(const FinVec& x, const MTParams& params) const;

  // the certificate as a single flat functional (theta-weighted sum of leaves)
  FinVec as_functional(const MTParams& params) const;

  unsigned depth() const;
  uint64_t leftmost_leaf() const;
  std::vector<uint64_t> leaf_positions() const;
  // weight of the root: theta_k of the top node, 1 for a bare leaf
  Rat weight(const MTParams& params) const;
  // family index at the root (0 for leaf)
  size_t root_family() const { return zero ? 0 : root.family; }

  // layered analysis (K^s(phi))_{s=0..m}: layer s is the frontier of maximal
  // subtrees of height <= s; the top layer is {phi} itself
  std::vector<std::vector<const Node*>> analysis() const;

  // checks the analysis conditions and that children ranges are successive
  // and admissible; throws std::logic_error on structural violations
  void validate(const MTParams& params) const;
};

struct NormResult {
  Rat value;
  NormCert cert;
};

}  // namespace mixnorm

#endif
