// orbits.cpp

#include "sphunit/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sphunit/errors.hpp"

namespace sphunit {

std::string to_string(DLabel l) { return l == DLabel::I ? "I" : "II"; }
std::string to_string(FormKind k) { return k == FormKind::sp ? "sp" : "so"; }

namespace {

std::map<int, int> counts(const std::vector<int>& parts) {
  std::map<int, int> c;
  for (int a : parts) ++c[a];
  return c;
}

// Parity of part sizes whose multiplicity is constrained to be even.
int constrained_parity(GroupType g) { return g == GroupType::B ? 1 : 0; }

}  // namespace

int OrbitPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int OrbitPartition::rank() const { return size() / 2; }

int OrbitPartition::multiplicity(int a) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), a));
}

bool OrbitPartition::very_even() const {
  if (gtype != GroupType::D || parts.empty()) return false;
  for (auto [a, c] : counts(parts))
    if (a % 2 != 0 || c % 2 != 0) return false;
  return true;
}

std::string to_string(const OrbitPartition& o) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < o.parts.size(); ++i) os << (i ? "," : "") << o.parts[i];
  os << ")";
  if (o.label) os << "_" << to_string(*o.label);
  return os.str();
}

bool is_valid_orbit(GroupType g, const std::vector<int>& parts) {
  if (g == GroupType::A) return std::all_of(parts.begin(), parts.end(), [](int a) { return a > 0; });
  int total = 0;
  for (int a : parts) {
    if (a <= 0) return false;
    total += a;
  }
  if (g == GroupType::C ? total % 2 != 1 : total % 2 != 0) return false;
  const int bad = constrained_parity(g);
  for (auto [a, c] : counts(parts))
    if (a % 2 == bad && c % 2 != 0) return false;
  return true;
}

bool is_valid_orbit(GroupType g, int rank, const std::vector<int>& parts) {
  if (!is_valid_orbit(g, parts)) return false;
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (g == GroupType::A) return total == rank;
  return total == (g == GroupType::C ? 2 * rank + 1 : 2 * rank);
}

OrbitPartition make_orbit(GroupType g, std::vector<int> parts, std::optional<DLabel> label) {
  std::sort(parts.begin(), parts.end());
  if (!is_valid_orbit(g, parts)) {
    OrbitPartition tmp{parts, g, std::nullopt};
    throw DomainError("invalid_orbit", "invalid partition " + to_string(tmp) + " for type " + std::string(1, to_char(g)));
  }
  OrbitPartition o{std::move(parts), g, std::nullopt};
  if (o.very_even()) o.label = label.value_or(DLabel::I);
  return o;
}

bool closure_leq(const OrbitPartition& a, const OrbitPartition& b) {
  if (a.size() != b.size()) throw DomainError("size_mismatch", "closure comparison needs equal sizes");
  std::vector<int> x(a.parts.rbegin(), a.parts.rend()), y(b.parts.rbegin(), b.parts.rend());
  const std::size_t len = std::max(x.size(), y.size());
  x.resize(len, 0);
  y.resize(len, 0);
  int sx = 0, sy = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sx += x[i];
    sy += y[i];
    if (sx < sy) return false;
  }
  return true;
}

std::vector<CentralizerFactor> centralizer(const OrbitPartition& o) {
  std::vector<CentralizerFactor> out;
  for (auto [a, c] : counts(o.parts)) {
    const bool odd = a % 2 == 1;
    FormKind k;
    if (o.gtype == GroupType::B) k = odd ? FormKind::sp : FormKind::so;
    else k = odd ? FormKind::so : FormKind::sp;
    out.push_back({k, c, a});
  }
  return out;
}

long component_group_order(const OrbitPartition& o) {
  const int want = o.gtype == GroupType::B ? 0 : 1;
  long order = 1;
  for (auto [a, c] : counts(o.parts))
    if (a % 2 == want) order *= 2;
  return order;
}

int Levi::rank() const {
  return std::accumulate(gl_sizes.begin(), gl_sizes.end(), 0) + residual_rank;
}

std::string Levi::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < gl_sizes.size(); ++i) os << (i ? " x " : "") << "gl(" << gl_sizes[i] << ")";
  if (residual_rank > 0 || gl_sizes.empty()) os << (gl_sizes.empty() ? "" : " x ") << "g(" << residual_rank << ")";
  return os.str();
}

Levi levi_from_pairs(GroupType g, std::vector<std::pair<int, Rational>> pairs, std::vector<int> residual_parts,
                     bool kl_repair) {
  if (kl_repair) {
    const int parity = g == GroupType::B ? 0 : 1;
    std::vector<std::pair<int, Rational>> kept;
    for (auto& pr : pairs) {
      const int a = pr.first;
      const bool movable = a % 2 == parity && pr.second.is_zero() &&
                           std::find(residual_parts.begin(), residual_parts.end(), a) == residual_parts.end();
      if (movable) {
        residual_parts.push_back(a);
        residual_parts.push_back(a);
      } else {
        kept.push_back(pr);
      }
    }
    pairs = std::move(kept);
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  Levi levi;
  levi.gtype = g;
  for (const auto& [a, nu] : pairs) {
    levi.gl_sizes.push_back(a);
    levi.characters.push_back(nu);
  }
  std::sort(residual_parts.begin(), residual_parts.end());
  const int total = std::accumulate(residual_parts.begin(), residual_parts.end(), 0);
  levi.residual_rank = total / 2;
  if (!residual_parts.empty() || g == GroupType::C) {
    if (g == GroupType::C && residual_parts.empty()) residual_parts.push_back(1);
    OrbitPartition r{residual_parts, g, std::nullopt};
    if (r.very_even()) r.label = DLabel::I;
    levi.residual_orbit = r;
  }
  return levi;
}

namespace {

std::pair<std::vector<int>, std::vector<int>> split_pairs(const OrbitPartition& o) {
  std::vector<int> pair_sizes, residual;
  for (auto [a, c] : counts(o.parts)) {
    for (int i = 0; i < c / 2; ++i) pair_sizes.push_back(a);
    if (c % 2) residual.push_back(a);
  }
  return {pair_sizes, residual};
}

Levi levi_with(const OrbitPartition& o, const Vec* nu, bool kl) {
  if (!is_valid_orbit(o.gtype, o.parts)) throw DomainError("invalid_orbit", "invalid orbit " + to_string(o));
  auto [sizes, residual] = split_pairs(o);
  if (nu && nu->size() != sizes.size())
    throw DomainError("size_mismatch", "need one nu per pair (a,a) of the orbit");
  std::vector<std::pair<int, Rational>> pairs;
  for (std::size_t i = 0; i < sizes.size(); ++i) pairs.emplace_back(sizes[i], nu ? (*nu)[i] : Rational(0));
  Levi l = levi_from_pairs(o.gtype, pairs, residual, kl);
  // Residual of a very even orbit keeps the label only when nothing was split off.
  if (l.residual_orbit && o.label && l.gl_sizes.empty()) l.residual_orbit->label = o.label;
  return l;
}

}  // namespace

Levi levi_bc(const OrbitPartition& o) { return levi_with(o, nullptr, false); }
Levi levi_bc(const OrbitPartition& o, const Vec& nu) { return levi_with(o, &nu, false); }
Levi levi_kl(const OrbitPartition& o, const Vec& nu) { return levi_with(o, &nu, true); }

bool is_distinguished(const OrbitPartition& o) {
  for (auto [a, c] : counts(o.parts))
    if (c > 1) return false;
  return true;
}

bool is_even(const OrbitPartition& o) {
  if (o.parts.empty()) return true;
  const int p = o.parts.front() % 2;
  return std::all_of(o.parts.begin(), o.parts.end(), [p](int a) { return a % 2 == p; });
}

bool is_smoothly_cuspidal(const OrbitPartition& o) {
  const auto c = counts(o.parts);
  switch (o.gtype) {
    case GroupType::B:  // sp: even sizes occur an even number of times
      for (auto [a, m] : c)
        if (a % 2 == 0 && m % 2 != 0) return false;
      return true;
    case GroupType::C: {  // so(odd): odd sizes except the largest occur evenly
      int largest_odd = -1;
      for (auto [a, m] : c)
        if (a % 2 == 1) largest_odd = a;
      for (auto [a, m] : c)
        if (a % 2 == 1 && a != largest_odd && m % 2 != 0) return false;
      return true;
    }
    case GroupType::D:  // so(even): odd sizes occur evenly
      for (auto [a, m] : c)
        if (a % 2 == 1 && m % 2 != 0) return false;
      return true;
    case GroupType::A:
      return true;
  }
  return false;
}

std::vector<OrbitPartition> all_orbits(GroupType g, int rank) {
  const int total = g == GroupType::A ? rank : (g == GroupType::C ? 2 * rank + 1 : 2 * rank);
  std::vector<OrbitPartition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::vector<int> parts(cur.rbegin(), cur.rend());
      if (!is_valid_orbit(g, parts)) return;
      OrbitPartition o{parts, g, std::nullopt};
      if (o.very_even()) {
        o.label = DLabel::I;
        out.push_back(o);
        o.label = DLabel::II;
      }
      out.push_back(o);
      return;
    }
    for (int a = std::min(remaining, max_part); a >= 1; --a) {
      cur.push_back(a);
      rec(remaining - a, a);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

Vec half_h(const OrbitPartition& o) {
  std::vector<Rational> eig;
  for (int a : o.parts)
    for (int j = 0; j < a; ++j) eig.push_back(Rational(a - 1 - 2 * j, 2));
  int zeros = 0;
  Vec out;
  for (const auto& e : eig) {
    if (e.sign() > 0) out.push_back(e);
    if (e.is_zero()) ++zeros;
  }
  if (o.gtype == GroupType::C) --zeros;
  for (int i = 0; i < zeros / 2; ++i) out.push_back(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sphunit
