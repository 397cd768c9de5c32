#include "mixnorm/params.hpp"

#include <algorithm>

namespace mixnorm {

namespace {

GrowthFlags compute_flags(const std::vector<FamilyDescriptor>& fams, const std::vector<Rat>& thetas) {
  GrowthFlags g;
  g.applicable = !fams.empty();
  for (size_t i = 0; i < fams.size(); ++i) {
    if (fams[i].kind != FamilyDescriptor::Kind::SizeBound) g.applicable = false;
    if (thetas[i].get_num() != 1) g.applicable = false;
  }
  if (!g.applicable) return g;

  auto m = [&](size_t i) { return Int(thetas[i].get_den()); };
  auto n = [&](size_t i) { return fams[i].size_bound; };

  g.m_growth = m(0) == 2;
  for (size_t i = 0; i + 1 < fams.size(); ++i)
    if (m(i + 1) < int_pow(m(i), 5)) g.m_growth = false;

  g.s_growth = true;
  g.s_chain_exact = true;
  for (size_t i = 0; i + 1 < fams.size(); ++i) {
    Int ni(n(i)), target(n(i + 1));
    if (ni < 2) {
      g.s_growth = g.s_chain_exact = false;
      break;
    }
    unsigned s = 1;
    Int pw = ni;
    while (pw < target) {
      pw *= ni;
      ++s;
    }
    g.s.push_back(s);
    if (pw != target) g.s_chain_exact = false;
    if (int_pow(Int(2), s) <= int_pow(m(i + 1), 3)) g.s_growth = false;
  }
  if (fams.size() < 2) g.s_growth = g.s_chain_exact = false;
  return g;
}

}  // namespace

MTParams::MTParams(std::vector<FamilyDescriptor> families, std::vector<Rat> thetas, GroundLayer ground)
    : families_(std::move(families)), thetas_(std::move(thetas)), ground_(std::move(ground)) {
  if (families_.empty()) throw std::invalid_argument("MTParams: need at least one family");
  if (families_.size() != thetas_.size())
    throw std::invalid_argument("MTParams: families and thetas must align");
  for (auto& t : thetas_)
    if (t <= 0 || t > 1) throw std::invalid_argument("MTParams: theta must lie in (0,1]");
  if (ground_.kind == GroundLayer::Kind::Polytope && ground_.functionals.empty())
    throw std::invalid_argument("MTParams: polytope ground needs functionals");
  flags_ = compute_flags(families_, thetas_);
}

uint64_t MTParams::n(size_t i) const {
  const auto& f = family(i);
  if (f.kind != FamilyDescriptor::Kind::SizeBound)
    throw std::logic_error("MTParams: n_i undefined for Schreier family " + f.str());
  return f.size_bound;
}

bool MTParams::all_size_bound() const {
  return std::all_of(families_.begin(), families_.end(), [](const FamilyDescriptor& f) {
    return f.kind == FamilyDescriptor::Kind::SizeBound;
  });
}

PExponent MTParams::p_exponent(size_t i) const {
  const Rat& th = theta(i);
  if (th.get_num() != 1) throw std::domain_error("p_exponent: theta_i must be a unit fraction");
  Int m = th.get_den();
  Int ni(n(i));
  if (!(m >= 2 && m < ni))
    throw std::domain_error("p_exponent: need 2 <= m_i < n_i at index " + std::to_string(i));
  return PExponent::one_over_one_minus_log(m, ni);
}

PExponent MTParams::p_min(size_t j) const {
  if (j < 1 || j > family_count()) throw std::out_of_range("p_min: bad index");
  PExponent best = p_exponent(1);
  for (size_t i = 2; i <= j; ++i) {
    PExponent cand = p_exponent(i);
    auto c = PExponent::cmp(cand, best);
    if (!c) throw PrecisionExhausted(512);
    if (*c < 0) best = cand;
  }
  return best;
}

void MTParams::validate_for_norm() const {
  for (size_t i = 1; i <= family_count(); ++i)
    if (theta(i) == 1)
      throw std::invalid_argument("MTParams: theta_" + std::to_string(i) +
                                  " = 1 with a single-part-reachable family is rejected");
}

std::string MTParams::str() const {
  std::string s = "(";
  for (size_t i = 1; i <= family_count(); ++i) {
    if (i > 1) s += ",";
    s += "(" + family(i).str() + "," + rat_str(theta(i)) + ")";
  }
  return s + ")";
}

MTParams make_params(const ParamRule& rule) {
  std::vector<FamilyDescriptor> fams;
  std::vector<Rat> thetas;
  Int m(rule.m_start);
  Int n(rule.n_start);
  for (size_t i = 0; i < rule.count; ++i) {
    if (!n.fits_ulong_p()) throw std::domain_error("make_params: family size bound overflow");
    fams.push_back(FamilyDescriptor::A(n.get_ui()));
    thetas.push_back(Rat(1, m));
    if (rule.m_rule == "square")
      m = m * m;
    else if (rule.m_rule == "pow5")
      m = int_pow(m, 5);
    else if (rule.m_rule == "double")
      m = 2 * m;
    else
      throw std::invalid_argument("make_params: unknown m rule '" + rule.m_rule + "'");
    if (rule.n_rule == "square")
      n = n * n;
    else if (rule.n_rule != "constant")
      throw std::invalid_argument("make_params: unknown n rule '" + rule.n_rule + "'");
  }
  return MTParams(std::move(fams), std::move(thetas));
}

}  // namespace mixnorm
