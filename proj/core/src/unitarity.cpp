#include "sphunit/unitarity.hpp"

#include <algorithm>
#include <map>

#include "sphunit/errors.hpp"

namespace sphunit {

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::sp: return "sp";
    case FactorKind::so_odd: return "so_odd";
    case FactorKind::so_even: return "so_even";
  }
  return "?";
}

std::string to_string(SahiResult r) {
  switch (r) {
    case SahiResult::Unitary: return "Unitary";
    case SahiResult::NotUnitary: return "NotUnitary";
    case SahiResult::Ambiguous: return "Ambiguous";
  }
  return "?";
}

int factor_rank(const FactorNu& f) { return f.r / 2; }

std::vector<FactorNu> znu_coordinates(const StringDecomposition& dec) {
  std::map<int, Vec> by_part;
  for (const auto& s : dec.step2()) by_part[s.glsize].push_back(s.nu.abs());
  std::vector<FactorNu> out;
  for (const auto& c : centralizer(dec.orbit)) {
    FactorNu f;
    f.part = c.part;
    f.r = c.r;
    if (c.kind == FormKind::sp) f.kind = FactorKind::sp;
    else f.kind = c.r % 2 ? FactorKind::so_odd : FactorKind::so_even;
    f.nus = by_part[c.part];
    while (static_cast<int>(f.nus.size()) < factor_rank(f)) f.nus.push_back(Rational(0));
    std::sort(f.nus.begin(), f.nus.end());
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

bool fail(std::string* why, const std::string& text) {
  if (why) *why = text;
  return false;
}

long count_in(const Vec& v, const Rational& lo, const Rational& hi, bool closed_hi) {
  return std::count_if(v.begin(), v.end(),
                       [&](const Rational& x) { return x > lo && (closed_hi ? x <= hi : x < hi); });
}

}  // namespace

bool cs_test(const FactorNu& f, bool parity_constraint, std::string* why) {
  Vec nu = f.nus;
  std::sort(nu.begin(), nu.end());
  if (!nu.empty() && nu.front() < 0) return fail(why, "negative nu");
  if (f.kind == FactorKind::sp) {
    if (!nu.empty() && nu.back() >= half()) return fail(why, "nu >= 1/2");
    return true;
  }
  if (!nu.empty() && nu.back() >= 1) return fail(why, "nu >= 1");
  for (size_t i = 0; i < nu.size(); ++i)
    for (size_t j = i + 1; j < nu.size(); ++j)
      if (nu[i] + nu[j] == 1) return fail(why, "boundary/ambiguous: nu_i + nu_j = 1");
  Vec lo, hi;
  for (const auto& x : nu) (x <= half() ? lo : hi).push_back(x);
  for (size_t j = 0; j + 1 < hi.size(); ++j)
    if (hi[j] == hi[j + 1]) return fail(why, "boundary/ambiguous: repeated nu > 1/2");
  if (!hi.empty() && count_in(lo, Rational(1) - hi[0], half(), true) % 2 != 0)
    return fail(why, "condition (1): odd count in (1-nu_{k+1}, 1/2]");
  for (size_t j = 0; j + 1 < hi.size(); ++j)
    if (count_in(lo, Rational(1) - hi[j + 1], Rational(1) - hi[j], false) % 2 != 1)
      return fail(why, "condition (2): even count in (1-nu_{k+j+1}, 1-nu_{k+j})");
  if (parity_constraint && f.kind == FactorKind::so_even && factor_rank(f) % 2 == 1 && !nu.empty() &&
      !nu.front().is_zero())
    return fail(why, "condition (3): odd rank needs nu_1 = 0");
  return true;
}

SahiResult sahi_test(Vec nus, SahiType t, bool odd_rank, SahiConvention c) {
  for (auto& x : nus) x = x.abs();
  std::sort(nus.begin(), nus.end());
  if (!nus.empty() && nus.back() >= 1) return SahiResult::NotUnitary;
  if (t == SahiType::D_like && odd_rank && !nus.empty() && !nus.front().is_zero()) return SahiResult::NotUnitary;
  if (std::count(nus.begin(), nus.end(), half()) > 1) return SahiResult::Ambiguous;
  std::vector<std::pair<Rational, bool>> v;
  for (const auto& x : nus) v.emplace_back(x > half() ? Rational(1) - x : x, x > half());
  std::sort(v.begin(), v.end());
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((v[i].second || v[j].second) && v[i].first == v[j].first) return SahiResult::Ambiguous;
  for (int i = 0; i < n; ++i) {
    if (!v[i].second) continue;
    const int pos = c == SahiConvention::from_bottom ? i + 1 : n - i;
    if (pos % 2 == 0) return SahiResult::NotUnitary;
  }
  return SahiResult::Unitary;
}

bool is_adapted(const StringRecord& s, GroupType g) {
  return g == GroupType::B ? s.glsize % 2 == 0 : s.glsize % 2 == 1;
}

Verdict verdict(const Parameter& p) {
  Verdict v;
  const StringDecomposition dec = extract_strings(p);
  v.hermitian = dec.hermitian;
  v.orbit = dec.orbit;
  v.factors = znu_coordinates(dec);
  if (!v.hermitian) {
    v.reasons.push_back("not hermitian");
    return v;
  }
  v.unitary = true;
  for (const auto& f : v.factors) {
    std::string why;
    if (!cs_test(f, true, &why)) {
      v.unitary = false;
      v.reasons.push_back(to_string(f.kind) + "(" + std::to_string(f.r) + ") from part " + std::to_string(f.part) +
                          ": " + why);
    }
  }
  return v;
}

}  // namespace sphunit
