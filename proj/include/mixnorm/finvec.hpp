#ifndef MIXNORM_FINVEC_HPP
#define MIXNORM_FINVEC_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mixnorm/index.hpp"
#include "mixnorm/rational.hpp"

namespace mixnorm {

// Closed interval of naturals [lo, hi], plus the distinguished empty interval.
struct Interval {
  uint64_t lo = 0, hi = 0;  // meaningful only when !empty
  bool empty = true;

  Interval() = default;
  Interval(uint64_t l, uint64_t h) : lo(l), hi(h), empty(false) {
    if (l == 0 || l > h) throw std::invalid_argument("Interval: need 1 <= lo <= hi");
  }
  static Interval none() { return Interval(); }

  bool contains(uint64_t n) const { return !empty && lo <= n && n <= hi; }
  uint64_t length() const { return empty ? 0 : hi - lo + 1; }
  bool operator==(const Interval& o) const {
    if (empty || o.empty) return empty == o.empty;
    return lo == o.lo && hi == o.hi;
  }
};

// Finitely supported vector with exact rational coordinates. Doubles as a
// functional; pairing is the exact bilinear sum over the common support.
// Zero entries are never stored, so equality is plain map equality.
class FinVec {
 public:
  FinVec() = default;

  static FinVec unit(const Index& i, Rat coeff = Rat(1)) {
    FinVec v;
    v.set(i, std::move(coeff));
    return v;
  }
  static FinVec unit_nat(uint64_t n, Rat coeff = Rat(1)) { return unit(Index::natural(n), std::move(coeff)); }

  bool is_zero() const { return entries_.empty(); }
  size_t support_size() const { return entries_.size(); }

  Rat value(const Index& i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Rat(0) : it->second;
  }

  void set(const Index& i, Rat v) {
    if (v == 0)
      entries_.erase(i);
    else
      entries_[i] = std::move(v);
  }

  void add(const Index& i, const Rat& v) { set(i, value(i) + v); }

  const std::map<Index, Rat>& entries() const { return entries_; }

  std::vector<Index> support() const {
    std::vector<Index> s;
    s.reserve(entries_.size());
    for (auto& [i, v] : entries_) s.push_back(i);
    return s;
  }

  FinVec& operator+=(const FinVec& o) {
    for (auto& [i, v] : o.entries_) add(i, v);
    return *this;
  }
  FinVec& operator-=(const FinVec& o) {
    for (auto& [i, v] : o.entries_) add(i, -v);
    return *this;
  }
  FinVec& operator*=(const Rat& c) {
    if (c == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [i, v] : entries_) v *= c;
    return *this;
  }
  friend FinVec operator+(FinVec a, const FinVec& b) { return a += b; }
  friend FinVec operator-(FinVec a, const FinVec& b) { return a -= b; }
  friend FinVec operator*(const Rat& c, FinVec v) { return v *= c; }
  FinVec operator-() const {
    FinVec r = *this;
    for (auto& [i, v] : r.entries_) v = -v;
    return r;
  }

  bool operator==(const FinVec& o) const { return entries_ == o.entries_; }

  template <class Pred>
  FinVec restrict_if(Pred keep) const {
    FinVec r;
    for (auto& [i, v] : entries_)
      if (keep(i)) r.entries_.emplace(i, v);
    return r;
  }

  FinVec restrict(const std::set<Index>& a) const {
    return restrict_if([&](const Index& i) { return a.count(i) > 0; });
  }

  FinVec restrict(const Interval& e) const {
    return restrict_if([&](const Index& i) { return i.is_nat() && e.contains(i.nat()); });
  }

  // restriction to [k, +inf) on naturals
  FinVec tail_from(uint64_t k) const {
    return restrict_if([&](const Index& i) { return i.is_nat() && i.nat() >= k; });
  }

  Rat l1() const {
    Rat s(0);
    for (auto& [i, v] : entries_) s += rat_abs(v);
    return s;
  }

  Rat linf() const {
    Rat s(0);
    for (auto& [i, v] : entries_) {
      Rat a = rat_abs(v);
      if (a > s) s = a;
    }
    return s;
  }

  std::optional<Index> min_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.begin()->first;
  }
  std::optional<Index> max_index() const {
    if (entries_.empty()) return std::nullopt;
    return entries_.rbegin()->first;
  }

  // range of a naturals-indexed vector: [min supp, max supp]
  Interval range() const {
    if (entries_.empty()) return Interval::none();
    return Interval(entries_.begin()->first.nat(), entries_.rbegin()->first.nat());
  }

  // canonical textual form, used for hashing and sigma histories
  std::string str() const {
    std::string s;
    for (auto& [i, v] : entries_) {
      if (!s.empty()) s += ';';
      s += i.str();
      s += ':';
      s += rat_str(v);
    }
    return s;
  }

 private:
  std::map<Index, Rat> entries_;
};

// exact bilinear pairing f(x) = sum_i f(i) x(i)
inline Rat pair(const FinVec& f, const FinVec& x) {
  const auto& a = f.entries();
  const auto& b = x.entries();
  // walk the smaller map
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  Rat s(0);
  for (auto& [i, v] : small) {
    auto it = big.find(i);
    if (it != big.end()) s += v * it->second;
  }
  return s;
}

}  // namespace mixnorm

#endif
