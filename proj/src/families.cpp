#include "mixnorm/families.hpp"

#include <algorithm>
#include <map>

namespace mixnorm {

std::string OrdinalNotation::str() const {
  if (omega_coeff == 0) return std::to_string(finite);
  std::string s = "w";
  if (omega_coeff > 1) s += "*" + std::to_string(omega_coeff);
  if (finite > 0) s += "+" + std::to_string(finite);
  return s;
}

OrdinalNotation OrdinalNotation::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("OrdinalNotation: empty");
  if (s[0] != 'w') return fin(static_cast<uint32_t>(std::stoul(s)));
  uint32_t c = 1, r = 0;
  size_t pos = 1;
  if (pos < s.size() && s[pos] == '*') {
    size_t end = s.find('+', pos);
    c = static_cast<uint32_t>(std::stoul(s.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1)));
    pos = end == std::string::npos ? s.size() : end;
  }
  if (pos < s.size()) {
    if (s[pos] != '+') throw std::invalid_argument("OrdinalNotation: bad form '" + s + "'");
    r = static_cast<uint32_t>(std::stoul(s.substr(pos + 1)));
  }
  return {c, r};
}

std::string FamilyDescriptor::str() const {
  if (kind == Kind::SizeBound) return "A" + std::to_string(size_bound);
  if (xi.omega_coeff == 0) return "S" + std::to_string(xi.finite);
  return "S[" + xi.str() + "]";
}

FamilyDescriptor FamilyDescriptor::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("FamilyDescriptor: bad form '" + s + "'");
  if (s[0] == 'A') return A(std::stoull(s.substr(1)));
  if (s[0] == 'S') {
    std::string body = s.substr(1);
    if (!body.empty() && body.front() == '[') {
      if (body.back() != ']') throw std::invalid_argument("FamilyDescriptor: bad form '" + s + "'");
      body = body.substr(1, body.size() - 2);
    }
    return S(OrdinalNotation::parse(body));
  }
  throw std::invalid_argument("FamilyDescriptor: bad form '" + s + "'");
}

namespace {

bool schreier_member(const std::vector<uint64_t>& f, const OrdinalNotation& xi);

// can f[from..] be split into at most `parts` successive pieces, each in S_zeta?
bool splittable(const std::vector<uint64_t>& f, size_t from, uint64_t parts, const OrdinalNotation& zeta,
                std::map<std::pair<size_t, uint64_t>, bool>& memo) {
  if (from == f.size()) return true;
  if (parts == 0) return false;
  auto key = std::make_pair(from, parts);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  std::vector<uint64_t> prefix;
  for (size_t end = from + 1; end <= f.size(); ++end) {
    prefix.assign(f.begin() + from, f.begin() + end);
    if (!schreier_member(prefix, zeta)) continue;
    if (splittable(f, end, parts - 1, zeta, memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

bool schreier_member(const std::vector<uint64_t>& f, const OrdinalNotation& xi) {
  if (f.empty()) return true;
  if (xi.is_zero()) return f.size() <= 1;
  if (xi.is_successor()) {
    std::map<std::pair<size_t, uint64_t>, bool> memo;
    return splittable(f, 0, f.front(), xi.pred(), memo);
  }
  // limit: F in S_xi iff F in S_{xi_t} for some t <= min F; the families
  // S_{xi_t} are nested in t, so t = min F decides.
  uint64_t t = f.front();
  uint32_t tt = t > 0xffffffffULL ? 0xffffffffU : static_cast<uint32_t>(t);
  return schreier_member(f, xi.fundamental(tt));
}

}  // namespace

bool family_member(const std::vector<uint64_t>& f_sorted, const FamilyDescriptor& fam) {
  for (size_t i = 0; i < f_sorted.size(); ++i) {
    if (f_sorted[i] == 0) throw std::invalid_argument("family_member: naturals start at 1");
    if (i > 0 && f_sorted[i] <= f_sorted[i - 1]) throw std::invalid_argument("family_member: set must be strictly increasing");
  }
  if (fam.kind == FamilyDescriptor::Kind::SizeBound) return f_sorted.size() <= fam.size_bound;
  return schreier_member(f_sorted, fam.xi);
}

bool family_member(const std::set<uint64_t>& f, const FamilyDescriptor& fam) {
  return family_member(std::vector<uint64_t>(f.begin(), f.end()), fam);
}

namespace {

struct Bounds {
  bool empty;
  uint64_t min, max;
};

Bounds bounds_of(const SetOrInterval& s) {
  if (std::holds_alternative<Interval>(s)) {
    const auto& e = std::get<Interval>(s);
    if (e.empty) return {true, 0, 0};
    return {false, e.lo, e.hi};
  }
  const auto& v = std::get<std::vector<uint64_t>>(s);
  if (v.empty()) return {true, 0, 0};
  auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  return {false, *mn, *mx};
}

}  // namespace

AdmissibleResult admissible(const std::vector<SetOrInterval>& sets, const FamilyDescriptor& fam) {
  AdmissibleResult r;
  std::vector<uint64_t> mins;
  uint64_t prev_max = 0;
  for (size_t i = 0; i < sets.size(); ++i) {
    Bounds b = bounds_of(sets[i]);
    if (b.empty) {
      r.reason = "member " + std::to_string(i + 1) + " is empty";
      return r;
    }
    if (i > 0 && b.min <= prev_max) {
      r.reason = "not successive: max E_" + std::to_string(i) + " = " + std::to_string(prev_max) +
                 " >= min E_" + std::to_string(i + 1) + " = " + std::to_string(b.min);
      return r;
    }
    mins.push_back(b.min);
    prev_max = b.max;
  }
  // canonical witness {min E_i}: by spreading it is in the family whenever
  // any witness is
  if (family_member(mins, fam)) {
    r.admissible = true;
    r.witness = std::move(mins);
  } else {
    r.reason = "witness {min E_i} not in " + fam.str();
  }
  return r;
}

}  // namespace mixnorm
