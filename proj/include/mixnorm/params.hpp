#ifndef MIXNORM_PARAMS_HPP
#define MIXNORM_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixnorm/families.hpp"
#include "mixnorm/finvec.hpp"
#include "mixnorm/powercmp.hpp"

namespace mixnorm {

// Per-coordinate ground norm with an enumerable symmetric norming set.
// Scalar is the mixed-Tsirelson case (F_n = {+-e_n*}).
struct GroundLayer {
  enum class Kind : uint8_t { Scalar, L1, Linf, Polytope };
  Kind kind = Kind::Scalar;
  uint64_t dim = 1;                  // block dimension for L1/Linf
  std::vector<FinVec> functionals;   // polytope gauge: the norming functionals (closed under minus)

  static GroundLayer scalar() { return {}; }
};

// Parameter conditions the constructions assume at full scale. They are
// recorded, never enforced: desk-scale parameter sets violate them and every
// checker that needs them downgrades to "assumption not met".
struct GrowthFlags {
  bool applicable = false;  // all families A_n with unit-fraction thetas
  bool m_growth = false;    // m_1 = 2 and m_{i+1} >= m_i^5
  bool s_growth = false;    // 2^{s_i} > m_{i+1}^3 for every defined s_i
  bool s_chain_exact = false;  // n_{i+1} = n_i^{s_i} exactly
  std::vector<unsigned> s;     // s_i = least t with n_i^t >= n_{i+1}
};

// The sequence (family_i, theta_i) defining a mixed-Tsirelson / d-product
// norm, plus the optional ground layer.
class MTParams {
 public:
  MTParams(std::vector<FamilyDescriptor> families, std::vector<Rat> thetas,
           GroundLayer ground = GroundLayer::scalar());

  size_t family_count() const { return families_.size(); }
  const FamilyDescriptor& family(size_t i) const { return families_.at(i - 1); }  // 1-based
  const Rat& theta(size_t i) const { return thetas_.at(i - 1); }
  const GroundLayer& ground() const { return ground_; }
  const GrowthFlags& growth() const { return flags_; }

  // m_i = 1/theta_i
  Rat m(size_t i) const { return Rat(1) / theta(i); }
  // n_i: the size bound of an A_n family (throws for Schreier families)
  uint64_t n(size_t i) const;
  bool all_size_bound() const;

  // p_i = 1/(1 - log_{n_i} m_i) (Kept symbolic; requires integral m_i < n_i.)
  PExponent p_exponent(size_t i) const;
  // min over i <= j of p_i
  PExponent p_min(size_t j) const;

  // throws std::invalid_argument if any theta equals 1 (the norm recursion's
  // domination rule needs theta < 1) -- called by the engines
  void validate_for_norm() const;

  std::string str() const;

 private:
  std::vector<FamilyDescriptor> families_;
  std::vector<Rat> thetas_;
  GroundLayer ground_;
  GrowthFlags flags_;
};

// toy generator: families A_{n_i}, theta_i = 1/m_i, with m doubling/…
// ("pow5" reproduces the stated full-scale scheme, astronomically large)
struct ParamRule {
  uint64_t m_start = 2;
  std::string m_rule = "square";  // square | pow5 | double
  uint64_t n_start = 3;
  std::string n_rule = "constant";  // constant | square
  size_t count = 2;
};
MTParams make_params(const ParamRule& rule);

}  // namespace mixnorm

#endif
