#ifndef MIXNORM_FAMILIES_HPP
#define MIXNORM_FAMILIES_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mixnorm/finvec.hpp"

namespace mixnorm {

// Ordinal below omega*omega in the normal form omega*c + r. For a limit
// value omega*c the fundamental sequence is fixed as xi_t = omega*(c-1) + t.
struct OrdinalNotation {
  uint32_t omega_coeff = 0;  // c
  uint32_t finite = 0;       // r

  static OrdinalNotation fin(uint32_t r) { return {0, r}; }
  static OrdinalNotation omega(uint32_t c = 1, uint32_t r = 0) { return {c, r}; }

  bool is_zero() const { return omega_coeff == 0 && finite == 0; }
  bool is_limit() const { return finite == 0 && omega_coeff > 0; }
  bool is_successor() const { return finite > 0; }
  OrdinalNotation pred() const {
    if (!is_successor()) throw std::logic_error("OrdinalNotation: pred of non-successor");
    return {omega_coeff, finite - 1};
  }
  // t-th member of the fundamental sequence of a limit value
  OrdinalNotation fundamental(uint32_t t) const {
    if (!is_limit()) throw std::logic_error("OrdinalNotation: fundamental sequence of non-limit");
    return {omega_coeff - 1, t};
  }

  auto operator<=>(const OrdinalNotation&) const = default;

  std::string str() const;
  // accepts "0", "3", "w", "w+1", "w*2", "w*2+3"
  static OrdinalNotation parse(const std::string& s);
};

// A compact adequate family: A_n (all sets of size <= n) or the Schreier
// family S_xi.
struct FamilyDescriptor {
  enum class Kind : uint8_t { SizeBound, Schreier };
  Kind kind = Kind::SizeBound;
  uint64_t size_bound = 1;  // for A_n
  OrdinalNotation xi;       // for S_xi

  static FamilyDescriptor A(uint64_t n) {
    FamilyDescriptor f;
    f.kind = Kind::SizeBound;
    f.size_bound = n;
    return f;
  }
  static FamilyDescriptor S(OrdinalNotation xi) {
    FamilyDescriptor f;
    f.kind = Kind::Schreier;
    f.xi = xi;
    return f;
  }

  bool operator==(const FamilyDescriptor&) const = default;

  std::string str() const;  // "A3", "S2", "S[w+1]"
  static FamilyDescriptor parse(const std::string& s);
};

// membership of a finite set of naturals (all >= 1)
bool family_member(const std::vector<uint64_t>& f_sorted, const FamilyDescriptor& fam);
bool family_member(const std::set<uint64_t>& f, const FamilyDescriptor& fam);

// A finite set given either explicitly or as an interval.
using SetOrInterval = std::variant<std::vector<uint64_t>, Interval>;

struct AdmissibleResult {
  bool admissible = false;
  std::vector<uint64_t> witness;  // {min E_1, ..., min E_d} when admissible
  std::string reason;             // structured reason when rejected without a family test
};

// Checks that E_1 < E_2 < ... are successive and that the canonical witness
// {min E_i} belongs to the family. Rejections for non-successive or empty
// members are reported in `reason`, not thrown.
AdmissibleResult admissible(const std::vector<SetOrInterval>& sets, const FamilyDescriptor& fam);

}  // namespace mixnorm

#endif
