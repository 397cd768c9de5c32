#include "mixnorm/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace mixnorm {

namespace {

// ---- int64 lane: coefficients as numerators over one common denominator ----

struct VecHash {
  size_t operator()(const std::vector<int64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (int64_t x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// closure over nonnegative representative vectors; Rep must provide a
// dedup container and the scaled-sum operation
template <class Lane>
std::vector<typename Lane::Vec> run_closure(Lane& lane, const MTParams& params, const Interval& window,
                                            unsigned depth, size_t budget) {
  const size_t w = window.length();
  using Vec = typename Lane::Vec;

  std::vector<Vec> all;
  std::vector<size_t> frontier;  // indices new in the previous layer

  auto push = [&](Vec v) -> bool {
    if (!lane.insert(v)) return false;
    all.push_back(std::move(v));
    if (all.size() > budget) throw EnumerationBudgetExceeded(all.size());
    return true;
  };

  for (size_t j = 0; j < w; ++j) push(lane.ground_unit(j));
  for (size_t i = 0; i < all.size(); ++i) frontier.push_back(i);

  auto min_off = [&](const Vec& v) { return lane.first_nonzero(v); };
  auto max_off = [&](const Vec& v) { return lane.last_nonzero(v); };

  for (unsigned s = 1; s <= depth && !frontier.empty(); ++s) {
    // bucket all current elements by first support offset
    std::vector<std::vector<size_t>> by_min(w);
    for (size_t i = 0; i < all.size(); ++i) by_min[min_off(all[i])].push_back(i);
    std::vector<bool> is_new(all.size(), false);
    for (size_t i : frontier) is_new[i] = true;
    size_t old_count = all.size();

    // extend partial combos part by part; at least one part must be new
    std::vector<size_t> chosen;
    std::vector<uint64_t> witness;
    std::function<void(size_t, bool)> extend = [&](size_t next_min_off, bool has_new) {
      for (size_t m = next_min_off; m < w; ++m) {
        witness.push_back(window.lo + m);
        for (size_t fi : by_min[m]) {
          if (fi >= old_count) continue;  // combos draw from the previous layers
          chosen.push_back(fi);
          bool now_new = has_new || is_new[fi];
          if (chosen.size() >= 2 && now_new) {
            for (size_t k = 1; k <= params.family_count(); ++k) {
              if (!family_member(witness, params.family(k))) continue;
              push(lane.scaled_sum(params, k, all, chosen));
            }
          }
          size_t e = max_off(all[fi]);
          if (e + 1 < w && chosen.size() < w) {
            // deeper parts only if some family can still accept the witness
            bool any = false;
            for (size_t k = 1; k <= params.family_count() && !any; ++k) {
              if (params.family(k).kind == FamilyDescriptor::Kind::SizeBound)
                any = witness.size() < params.family(k).size_bound;
              else
                any = family_member(witness, params.family(k));
            }
            if (any) extend(e + 1, now_new);
          }
          chosen.pop_back();
        }
        witness.pop_back();
      }
    };
    extend(0, false);

    frontier.clear();
    for (size_t i = old_count; i < all.size(); ++i) frontier.push_back(i);
  }
  return all;
}

struct Int64Lane {
  using Vec = std::vector<int64_t>;
  size_t w;
  int64_t denom;  // common denominator
  std::unordered_set<Vec, VecHash> seen;
  std::vector<std::pair<int64_t, int64_t>> theta_nd;  // theta_k as (num, den)

  bool insert(const Vec& v) { return seen.insert(v).second; }
  Vec ground_unit(size_t j) const {
    Vec v(w, 0);
    v[j] = denom;
    return v;
  }
  size_t first_nonzero(const Vec& v) const {
    for (size_t j = 0; j < w; ++j)
      if (v[j]) return j;
    return w;
  }
  size_t last_nonzero(const Vec& v) const {
    for (size_t j = w; j-- > 0;)
      if (v[j]) return j;
    return w;
  }
  Vec scaled_sum(const MTParams&, size_t k, const std::vector<Vec>& all, const std::vector<size_t>& chosen) const {
    Vec v(w, 0);
    for (size_t fi : chosen)
      for (size_t j = 0; j < w; ++j) v[j] += all[fi][j];
    auto [a, b] = theta_nd[k - 1];
    for (size_t j = 0; j < w; ++j) {
      // divisibility holds as long as nesting stays within the depth the
      // denominator was sized for
      if ((v[j] % b) * a % b != 0) throw std::logic_error("enumerate: denominator budget breached");
      v[j] = v[j] / b * a + (v[j] % b) * a / b;
    }
    return v;
  }
};

struct RatLane {
  using Vec = std::vector<Rat>;
  size_t w;
  std::unordered_set<std::string> seen;

  static std::string key(const Vec& v) {
    std::string s;
    for (auto& r : v) {
      s += rat_str(r);
      s += ',';
    }
    return s;
  }
  bool insert(const Vec& v) { return seen.insert(key(v)).second; }
  Vec ground_unit(size_t j) const {
    Vec v(w, Rat(0));
    v[j] = 1;
    return v;
  }
  size_t first_nonzero(const Vec& v) const {
    for (size_t j = 0; j < w; ++j)
      if (v[j] != 0) return j;
    return w;
  }
  size_t last_nonzero(const Vec& v) const {
    for (size_t j = w; j-- > 0;)
      if (v[j] != 0) return j;
    return w;
  }
  Vec scaled_sum(const MTParams& params, size_t k, const std::vector<Vec>& all,
                 const std::vector<size_t>& chosen) const {
    Vec v(w, Rat(0));
    for (size_t fi : chosen)
      for (size_t j = 0; j < w; ++j) v[j] += all[fi][j];
    const Rat& th = params.theta(k);
    for (size_t j = 0; j < w; ++j) v[j] *= th;
    return v;
  }
};

}  // namespace

std::vector<std::vector<Rat>> enumerate_norming_cone(const MTParams& params, const Interval& window,
                                                     unsigned depth, size_t budget) {
  if (params.ground().kind != GroundLayer::Kind::Scalar)
    throw std::invalid_argument("enumerate_norming_cone: scalar ground only");
  params.validate_for_norm();
  if (window.empty) return {};
  const size_t w = window.length();

  // try the int64 lane: common denominator lcm(theta denominators)^depth
  Int lcm(1);
  for (size_t k = 1; k <= params.family_count(); ++k) {
    Int d = params.theta(k).get_den();
    lcm = lcm / gcd(lcm, d) * d;
  }
  Int big = int_pow(lcm, depth);
  bool int_ok = big.fits_slong_p() && big.get_si() < (int64_t(1) << 40);
  for (size_t k = 1; int_ok && k <= params.family_count(); ++k)
    if (params.theta(k).get_num() > 1024) int_ok = false;

  if (int_ok) {
    Int64Lane lane;
    lane.w = w;
    lane.denom = big.get_si();
    for (size_t k = 1; k <= params.family_count(); ++k)
      lane.theta_nd.emplace_back(params.theta(k).get_num().get_si(), params.theta(k).get_den().get_si());
    auto rows = run_closure(lane, params, window, depth, budget);
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (auto& r : rows) {
      std::vector<Rat> v(w);
      for (size_t j = 0; j < w; ++j) v[j] = make_rat(Int(r[j]), Int(lane.denom));
      out.push_back(std::move(v));
    }
    return out;
  }
  RatLane lane;
  lane.w = w;
  return run_closure(lane, params, window, depth, budget);
}

std::vector<FinVec> enumerate_norming_set(const MTParams& params, const Interval& window, unsigned depth,
                                          size_t budget) {
  auto cone = enumerate_norming_cone(params, window, depth, budget);
  std::vector<FinVec> out;
  for (auto& row : cone) {
    std::vector<size_t> supp;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) supp.push_back(j);
    // expand the sign orbit of the representative
    size_t patterns = size_t(1) << supp.size();
    if (out.size() + patterns > budget) throw EnumerationBudgetExceeded(out.size() + patterns);
    for (size_t mask = 0; mask < patterns; ++mask) {
      FinVec f;
      for (size_t t = 0; t < supp.size(); ++t) {
        size_t j = supp[t];
        Rat c = row[j];
        if (mask & (size_t(1) << t)) c = -c;
        f.set(Index::natural(window.lo + j), c);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace mixnorm
