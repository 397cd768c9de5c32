#ifndef MIXNORM_INDEX_HPP
#define MIXNORM_INDEX_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixnorm {

// Coordinate index of a finitely supported vector: either a natural number
// (sequence spaces, naturals start at 1) or a tree-node address given by its
// digit path from the root ("3.0.7" = third child, then first, then eighth).
// One index type lets the same vector kernel serve both vocabularies.
class Index {
 public:
  enum class Kind : uint8_t { Nat, Node };

  Index() : kind_(Kind::Nat), nat_(1) {}

  static Index natural(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Index: naturals start at 1");
    Index i;
    i.kind_ = Kind::Nat;
    i.nat_ = n;
    return i;
  }

  static Index node(std::vector<uint64_t> digits) {
    if (digits.empty()) throw std::invalid_argument("Index: empty node address (root carries no coordinate)");
    Index i;
    i.kind_ = Kind::Node;
    i.digits_ = std::move(digits);
    return i;
  }

  Kind kind() const { return kind_; }
  bool is_nat() const { return kind_ == Kind::Nat; }
  bool is_node() const { return kind_ == Kind::Node; }

  uint64_t nat() const {
    if (!is_nat()) throw std::logic_error("Index: not a natural");
    return nat_;
  }

  const std::vector<uint64_t>& digits() const {
    if (!is_node()) throw std::logic_error("Index: not a tree node");
    return digits_;
  }

  // height of the node (= length of the address)
  size_t level() const { return digits().size(); }

  bool operator==(const Index& o) const {
    if (kind_ != o.kind_) return false;
    return is_nat() ? nat_ == o.nat_ : digits_ == o.digits_;
  }

  // Total order: naturals first (by value), then node addresses lexicographically.
  std::strong_ordering operator<=>(const Index& o) const {
    if (kind_ != o.kind_) return kind_ == Kind::Nat ? std::strong_ordering::less : std::strong_ordering::greater;
    if (is_nat()) return nat_ <=> o.nat_;
    return digits_ <=> o.digits_;
  }

  std::string str() const {
    if (is_nat()) return std::to_string(nat_);
    std::string s;
    for (size_t i = 0; i < digits_.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(digits_[i]);
    }
    return s;
  }

  static Index parse_node(const std::string& s) {
    std::vector<uint64_t> ds;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t dot = s.find('.', pos);
      std::string part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
      if (part.empty()) throw std::invalid_argument("Index: bad node address '" + s + "'");
      ds.push_back(std::stoull(part));
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
    return node(std::move(ds));
  }

 private:
  Kind kind_;
  uint64_t nat_ = 0;
  std::vector<uint64_t> digits_;
};

}  // namespace mixnorm

#endif
