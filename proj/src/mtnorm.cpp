#include "mixnorm/mtnorm.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace mixnorm {

namespace {

struct Cand {
  Rat value;
  NormCert::Node node;
  unsigned depth = 0;
  uint64_t leftmost = 0;
};

// strict improvement; ties broken by (depth, leftmost leaf), smaller wins
bool improves(const Cand& a, const Cand& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.depth != b.depth) return a.depth < b.depth;
  return a.leftmost < b.leftmost;
}

class Engine {
 public:
  Engine(std::vector<BlockView> blocks, const MTParams& params)
      : blocks_(std::move(blocks)), params_(params) {}

  NormResult run() {
    if (blocks_.empty()) {
      NormCert c;
      c.zero = true;
      return {Rat(0), c};
    }
    const Cand& top = cell(0, blocks_.size() - 1);
    NormCert c;
    c.root = top.node;
    return {top.value, c};
  }

 private:
  std::vector<BlockView> blocks_;  // sorted by position
  const MTParams& params_;
  std::map<std::pair<size_t, size_t>, Cand> memo_;

  Cand leaf_cand(size_t t) const {
    Cand c;
    c.value = blocks_[t].ground_norm;
    c.node.family = 0;
    c.node.position = blocks_[t].pos;
    c.node.functional = blocks_[t].functional;
    c.node.leaf_value = blocks_[t].ground_norm;
    c.depth = 0;
    c.leftmost = blocks_[t].pos;
    return c;
  }

  static Cand make_sum(size_t family, const Rat& theta, std::vector<const Cand*> parts) {
    Cand c;
    c.value = 0;
    c.node.family = family;
    unsigned d = 0;
    for (auto* p : parts) {
      c.value += p->value;
      c.node.children.push_back(p->node);
      d = std::max(d, p->depth + 1);
    }
    c.value *= theta;
    c.depth = d;
    c.leftmost = parts.front()->leftmost;
    return c;
  }

  // norm of the restriction to block positions [a..b]
  const Cand& cell(size_t a, size_t b) {
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // ground functionals
    Cand best = leaf_cand(a);
    for (size_t t = a + 1; t <= b; ++t) {
      Cand c = leaf_cand(t);
      if (improves(c, best)) best = std::move(c);
    }
    if (a < b) {
      // functionals not touching both endpoints live in a shorter cell
      {
        const Cand& c = cell(a + 1, b);
        if (improves(c, best)) best = c;
      }
      {
        const Cand& c = cell(a, b - 1);
        if (improves(c, best)) best = c;
      }
      for (size_t k = 1; k <= params_.family_count(); ++k) {
        auto c = family_combo(k, a, b);
        if (c && improves(*c, best)) best = std::move(*c);
      }
    }
    return memo_.emplace(key, std::move(best)).first->second;
  }

  // best theta_k * sum over >= 2 successive parts, first starting at a,
  // last ending at b, admissible for family k
  std::optional<Cand> family_combo(size_t k, size_t a, size_t b) {
    const FamilyDescriptor& fam = params_.family(k);
    if (fam.kind == FamilyDescriptor::Kind::SizeBound)
      return size_bound_combo(k, fam.size_bound, a, b);
    return schreier_combo(k, fam, a, b);
  }

  std::optional<Cand> size_bound_combo(size_t k, uint64_t nbound, size_t a, size_t b) {
    size_t width = b - a + 1;
    uint64_t dmax = std::min<uint64_t>(nbound, width);
    if (dmax < 2) return std::nullopt;
    // g[c][d]: best sum of parts covering from some start >= c to exactly b
    // using <= d parts; tracked as (value, chosen part [i..j], next start)
    struct GCell {
      bool ok = false;
      Rat value;
      size_t i, j;
    };
    std::vector<std::vector<GCell>> g(width + 1, std::vector<GCell>(dmax + 1));
    // c indexes offset from a; c == width means past the end
    for (size_t c = width; c-- > 0;) {
      for (uint64_t d = 1; d <= dmax; ++d) {
        GCell bestg;
        for (size_t i = a + c; i <= b; ++i) {
          for (size_t j = i; j <= b; ++j) {
            if (j == b) {
              const Cand& part = cell(i, b);
              if (!bestg.ok || part.value > bestg.value) bestg = {true, part.value, i, b};
            } else if (d >= 2) {
              const GCell& rest = g[j + 1 - a][d - 1];
              if (!rest.ok) continue;
              Rat v = cell(i, j).value + rest.value;
              if (!bestg.ok || v > bestg.value) bestg = {true, v, i, j};
            }
          }
        }
        g[c][d] = bestg;
      }
    }
    // first part starts exactly at a and must not be the only one
    std::optional<Cand> best;
    for (size_t j = a; j < b; ++j) {
      const GCell& rest = g[j + 1 - a][dmax - 1];
      if (!rest.ok) continue;
      // reconstruct the part list
      std::vector<const Cand*> parts{&cell(a, j)};
      size_t c = j + 1 - a;
      uint64_t d = dmax - 1;
      while (true) {
        const GCell& gc = g[c][d];
        parts.push_back(&cell(gc.i, gc.j));
        if (gc.j == b) break;
        c = gc.j + 1 - a;
        --d;
      }
      Cand cand = make_sum(k, params_.theta(k), parts);
      if (!best || improves(cand, *best)) best = std::move(cand);
    }
    return best;
  }

  std::optional<Cand> schreier_combo(size_t k, const FamilyDescriptor& fam, size_t a, size_t b) {
    std::optional<Cand> best;
    std::vector<std::pair<size_t, size_t>> parts;
    std::vector<uint64_t> witness;
    // parts start at a; each later part starts after the previous ends;
    // the last part must end at b
    std::function<void(size_t)> rec = [&](size_t start) {
      witness.push_back(blocks_[start].pos);
      // a partial witness must itself be in the family (adequacy), prune otherwise
      if (family_member(witness, fam)) {
        for (size_t j = start; j <= b; ++j) {
          parts.emplace_back(start, j);
          if (j == b) {
            if (parts.size() >= 2) {
              std::vector<const Cand*> ps;
              ps.reserve(parts.size());
              for (auto& [i2, j2] : parts) ps.push_back(&cell(i2, j2));
              Cand cand = make_sum(k, params_.theta(k), ps);
              if (!best || improves(cand, *best)) best = std::move(cand);
            }
          } else {
            for (size_t next = j + 1; next <= b; ++next) rec(next);
          }
          parts.pop_back();
        }
      }
      witness.pop_back();
    };
    rec(a);
    return best;
  }
};

}  // namespace

NormResult mt_norm_blocks(std::vector<BlockView> blocks, const MTParams& params) {
  params.validate_for_norm();
  std::sort(blocks.begin(), blocks.end(), [](const BlockView& x, const BlockView& y) { return x.pos < y.pos; });
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i].pos == blocks[i + 1].pos) throw std::invalid_argument("mt_norm_blocks: duplicate position");
  std::erase_if(blocks, [](const BlockView& bl) { return bl.ground_norm == 0; });
  for (auto& bl : blocks)
    if (bl.ground_norm < 0) throw std::invalid_argument("mt_norm_blocks: negative ground norm");
  return Engine(std::move(blocks), params).run();
}

BlockView ground_block(uint64_t pos, const FinVec& block, const GroundLayer& g) {
  BlockView bv;
  bv.pos = pos;
  switch (g.kind) {
    case GroundLayer::Kind::Scalar: {
      if (block.support_size() > 1)
        throw std::invalid_argument("ground_block: scalar ground expects one coordinate per block");
      if (block.is_zero()) {
        bv.ground_norm = 0;
        return bv;
      }
      auto& [idx, val] = *block.entries().begin();
      bv.ground_norm = rat_abs(val);
      bv.functional = FinVec::unit(idx, val > 0 ? Rat(1) : Rat(-1));
      return bv;
    }
    case GroundLayer::Kind::L1: {
      bv.ground_norm = block.l1();
      for (auto& [idx, val] : block.entries()) bv.functional.set(idx, val > 0 ? Rat(1) : Rat(-1));
      return bv;
    }
    case GroundLayer::Kind::Linf: {
      bv.ground_norm = block.linf();
      for (auto& [idx, val] : block.entries()) {
        if (rat_abs(val) == bv.ground_norm) {
          bv.functional = FinVec::unit(idx, val > 0 ? Rat(1) : Rat(-1));
          break;
        }
      }
      return bv;
    }
    case GroundLayer::Kind::Polytope: {
      bool first = true;
      for (auto& f : g.functionals) {
        for (int sgn : {1, -1}) {
          FinVec cand = f;
          if (sgn < 0) cand = -cand;
          Rat v = pair(cand, block);
          if (first || v > bv.ground_norm) {
            bv.ground_norm = v;
            bv.functional = cand;
            first = false;
          }
        }
      }
      if (bv.ground_norm < 0) throw std::invalid_argument("ground_block: polytope functionals not symmetric");
      return bv;
    }
  }
  throw std::logic_error("ground_block: unreachable");
}

NormResult mt_norm(const FinVec& x, const MTParams& params) {
  if (params.ground().kind != GroundLayer::Kind::Scalar)
    throw std::invalid_argument("mt_norm: non-scalar grounds go through dproduct_norm");
  std::vector<BlockView> blocks;
  for (auto& [idx, val] : x.entries()) {
    if (!idx.is_nat()) throw std::invalid_argument("mt_norm: vector must be indexed by naturals");
    blocks.push_back(ground_block(idx.nat(), FinVec::unit(idx, val), params.ground()));
  }
  return mt_norm_blocks(std::move(blocks), params);
}

}  // namespace mixnorm
