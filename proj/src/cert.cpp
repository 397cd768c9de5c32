#include "mixnorm/cert.hpp"

#include <algorithm>

namespace mixnorm {

namespace {

Rat eval_node(const NormCert::Node& n, const FinVec& x, const MTParams& params) {
  if (n.is_leaf()) {
    if (!n.functional.is_zero()) return pair(n.functional, x);
    return n.leaf_value;  // externally-normed leaf (gauge ground)
  }
  Rat s(0);
  for (auto& c : n.children) s += eval_node(c, x, params);
  return params.theta(n.family) * s;
}

void collect_functional(const NormCert::Node& n, const Rat& scale, const MTParams& params, FinVec& out) {
  if (n.is_leaf()) {
    if (n.functional.is_zero())
      throw std::logic_error("NormCert: leaf without an explicit functional cannot be flattened");
    FinVec f = n.functional;
    f *= scale;
    out += f;
    return;
  }
  Rat s = scale * params.theta(n.family);
  for (auto& c : n.children) collect_functional(c, s, params, out);
}

unsigned node_depth(const NormCert::Node& n) {
  unsigned d = 0;
  for (auto& c : n.children) d = std::max(d, node_depth(c) + 1);
  return d;
}

void leaf_positions_of(const NormCert::Node& n, std::vector<uint64_t>& out) {
  if (n.is_leaf()) {
    out.push_back(n.position);
    return;
  }
  for (auto& c : n.children) leaf_positions_of(c, out);
}

void span_of(const NormCert::Node& n, uint64_t& lo, uint64_t& hi) {
  if (n.is_leaf()) {
    lo = std::min(lo, n.position);
    hi = std::max(hi, n.position);
    return;
  }
  for (auto& c : n.children) span_of(c, lo, hi);
}

}  // namespace

Rat NormCert::eval(const FinVec& x, const MTParams& params) const {
  if (zero) return Rat(0);
  return eval_node(root, x, params);
}

FinVec NormCert::as_functional(const MTParams& params) const {
  FinVec f;
  if (!zero) collect_functional(root, Rat(1), params, f);
  return f;
}

unsigned NormCert::depth() const { return zero ? 0 : node_depth(root); }

uint64_t NormCert::leftmost_leaf() const {
  if (zero) return 0;
  const Node* n = &root;
  while (!n->is_leaf()) n = &n->children.front();
  return n->position;
}

std::vector<uint64_t> NormCert::leaf_positions() const {
  std::vector<uint64_t> out;
  if (!zero) leaf_positions_of(root, out);
  return out;
}

Rat NormCert::weight(const MTParams& params) const {
  if (zero || root.is_leaf()) return Rat(1);
  return params.theta(root.family);
}

std::vector<std::vector<const NormCert::Node*>> NormCert::analysis() const {
  std::vector<std::vector<const Node*>> layers;
  if (zero) return layers;
  unsigned top = node_depth(root);
  layers.resize(top + 1);
  // layer s holds the frontier: maximal subtrees of height <= s
  for (unsigned s = 0; s <= top; ++s) {
    // walk left to right, cutting at the first node of height <= s
    std::vector<const Node*> stack{&root};
    std::vector<const Node*> order;
    std::function<void(const Node&)> walk = [&](const Node& n) {
      if (node_depth(n) <= s) {
        layers[s].push_back(&n);
        return;
      }
      for (auto& c : n.children) walk(c);
    };
    walk(root);
  }
  return layers;
}

void NormCert::validate(const MTParams& params) const {
  if (zero) return;
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.is_leaf()) return;
    if (n.family < 1 || n.family > params.family_count())
      throw std::logic_error("NormCert: family index out of range");
    if (n.children.size() < 1) throw std::logic_error("NormCert: internal node without children");
    std::vector<SetOrInterval> ranges;
    for (auto& c : n.children) {
      uint64_t lo = UINT64_MAX, hi = 0;
      span_of(c, lo, hi);
      ranges.emplace_back(Interval(lo, hi));
    }
    auto adm = admissible(ranges, params.family(n.family));
    if (!adm.admissible)
      throw std::logic_error("NormCert: children not admissible for " + params.family(n.family).str() +
                             " (" + adm.reason + ")");
    for (auto& c : n.children) walk(c);
  };
  walk(root);

  // analysis conditions: supports of every layer union to supp(phi)
  auto base = leaf_positions();
  std::vector<uint64_t> sorted_base = base;
  std::sort(sorted_base.begin(), sorted_base.end());
  for (auto& layer : analysis()) {
    std::vector<uint64_t> acc;
    uint64_t prev_hi = 0;
    bool first = true;
    for (auto* n : layer) {
      uint64_t lo = UINT64_MAX, hi = 0;
      span_of(*n, lo, hi);
      if (!first && lo <= prev_hi) throw std::logic_error("NormCert: analysis layer not successive");
      first = false;
      prev_hi = hi;
      leaf_positions_of(*n, acc);
    }
    std::sort(acc.begin(), acc.end());
    if (acc != sorted_base) throw std::logic_error("NormCert: analysis layer misses support");
  }
}

}  // namespace mixnorm
