#include "sphunit/levi_eo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sphunit/errors.hpp"
#include "sphunit/wtypes.hpp"

namespace sphunit {

std::string to_string(Flavor f) { return f == Flavor::Even ? "even" : "odd"; }

namespace {

StringRecord make_record(const Rational& start, int len, Origin origin) {
  StringRecord r;
  r.start = start;
  r.end = start + (len - 1);
  r.nu = (r.start + r.end) / 2;
  const Rational f = start.frac();
  r.tau = std::min(f, Rational(1) - f);
  r.origin = origin;
  r.glsize = len;
  return r;
}

// x values of the Step-1 parts, ascending. Type B prepends 0 when the
// number of parts is even.
std::vector<int> step1_x(const StringDecomposition& dec) {
  std::vector<int> xs;
  for (const auto& s : dec.step1()) xs.push_back(dec.gtype == GroupType::B ? s.glsize : s.glsize - 1);
  std::sort(xs.begin(), xs.end());
  if (dec.gtype == GroupType::B && xs.size() % 2 == 0) xs.insert(xs.begin(), 0);
  return xs;
}

struct Builder {
  InducedData data;
  void gl(const Rational& start, int len) {
    if (len <= 0) return;
    StringRecord r = make_record(start, len, Origin::Step1);
    data.levi.gl_sizes.push_back(len);
    data.levi.characters.push_back(r.nu);
    data.char_strings.push_back(r);
  }
};

// String (-hi .. lo) for C, D; (-hi+1/2 .. lo-1/2) for B.
void add_pair(Builder& b, GroupType g, int lo, int hi) {
  if (g == GroupType::B)
    b.gl(Rational(-hi) + half(), lo + hi);
  else
    b.gl(Rational(-hi), lo + hi + 1);
}

InducedData build(const StringDecomposition& dec, Flavor flavor) {
  if (dec.gtype == GroupType::A) throw DomainError("bad_type", "levi_e/levi_o need type B, C or D");
  const GroupType g = dec.gtype;
  Builder b;
  b.data.flavor = flavor;
  b.data.levi.gtype = g;
  for (const auto& s : dec.step2()) {
    b.data.levi.gl_sizes.push_back(s.glsize);
    b.data.levi.characters.push_back(s.nu);
    b.data.char_strings.push_back(s);
  }
  const std::vector<int> x = step1_x(dec);
  const int r = static_cast<int>(x.size());
  int residual = 0;
  if (g == GroupType::D) {
    // r = 2m, possibly 0. The even flavor keeps a residual factor on the
    // largest x; the odd flavor pairs consecutive x's and has none.
    if (flavor == Flavor::Odd || r == 0) {
      for (int i = 0; i + 1 < r; i += 2) add_pair(b, g, x[i], x[i + 1]);
    } else {
      b.gl(Rational(-x[0]), x[0]);
      for (int i = 1; i + 1 < r - 1; i += 2) add_pair(b, g, x[i], x[i + 1]);
      residual = x[r - 1] + 1;
    }
  } else {
    // r = 2m + 1 for B (after padding) and C.
    if (flavor == Flavor::Even) {
      for (int i = 0; i + 1 < r; i += 2) add_pair(b, g, x[i], x[i + 1]);
      residual = x[r - 1];
    } else {
      for (int i = 1; i + 1 < r; i += 2) add_pair(b, g, x[i], x[i + 1]);
      residual = x[0];
    }
  }
  b.data.levi.residual_rank = residual;
  return b.data;
}

std::vector<int> step1_parts(const StringDecomposition& dec) {
  std::vector<int> parts;
  for (const auto& s : dec.step1())
    parts.push_back(dec.gtype == GroupType::B ? 2 * s.glsize : 2 * s.glsize - 1);
  return parts;
}

void check_m(int m) {
  if (m < 0) throw DomainError("negative_m", "m must be nonnegative");
}

// P[j] = #{(m_1..m_k, m_0) : sum = j, m_i <= a_i, m_0 in allowed residual values}.
std::vector<long> compositions(const Levi& levi, const std::vector<int>& residual_values) {
  const int total = levi.rank();
  std::vector<long> p(total + 1, 0);
  for (int v : residual_values)
    if (v <= total) p[v] += 1;
  for (int a : levi.gl_sizes) {
    std::vector<long> q(total + 1, 0);
    for (int j = 0; j <= total; ++j)
      if (p[j])
        for (int t = 0; t <= a && j + t <= total; ++t) q[j + t] += p[j];
    p = std::move(q);
  }
  return p;
}

}  // namespace

InducedData levi_e(const StringDecomposition& dec) { return build(dec, Flavor::Even); }
InducedData levi_o(const StringDecomposition& dec) { return build(dec, Flavor::Odd); }

namespace {

// Step-2 strings give pairs with their nu; a Step-1 part occurring c times
// gives c/2 pairs with nu = 0 and stays in the residual once if c is odd.
InducedData induced(const StringDecomposition& dec, bool kl_repair) {
  std::vector<std::pair<int, Rational>> pairs;
  std::vector<StringRecord> strings;
  for (const auto& s : dec.step2()) {
    pairs.emplace_back(s.glsize, s.nu);
    strings.push_back(s);
  }
  std::vector<int> residual;
  std::map<int, int> count;
  for (int a : step1_parts(dec)) ++count[a];
  for (auto [a, c] : count) {
    for (int i = 0; i < c / 2; ++i) {
      pairs.emplace_back(a, Rational(0));
      strings.push_back(canonical_string(dec.gtype, Rational(-(a - 1), 2), a));
    }
    if (c % 2) residual.push_back(a);
  }

  std::vector<std::size_t> keep;
  const int parity = dec.gtype == GroupType::B ? 0 : 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int a = pairs[i].first;
    if (kl_repair && a % 2 == parity && pairs[i].second.is_zero() &&
        std::find(residual.begin(), residual.end(), a) == residual.end()) {
      residual.push_back(a);
      residual.push_back(a);
    } else {
      keep.push_back(i);
    }
  }
  std::stable_sort(keep.begin(), keep.end(), [&](auto x, auto y) { return pairs[x].first < pairs[y].first; });

  InducedData d;
  std::vector<std::pair<int, Rational>> kept;
  for (auto i : keep) {
    kept.push_back(pairs[i]);
    d.char_strings.push_back(strings[i]);
  }
  d.levi = levi_from_pairs(dec.gtype, kept, residual, false);
  return d;
}

}  // namespace

InducedData induced_bc(const StringDecomposition& dec) { return induced(dec, false); }
InducedData induced_kl(const StringDecomposition& dec) { return induced(dec, true); }

int mult_sigma_e(int m, const Levi& levi) {
  check_m(m);
  if (m > levi.rank()) return 0;
  std::vector<int> res{0};
  if (levi.gtype == GroupType::D && levi.residual_rank > 0) res.push_back(levi.residual_rank);
  return static_cast<int>(compositions(levi, res)[m]);
}

int mult_sigma_o(int m, const Levi& levi) {
  check_m(m);
  if (2 * m > levi.rank()) return 0;
  std::vector<int> res(levi.residual_rank + 1);
  std::iota(res.begin(), res.end(), 0);
  const auto p = compositions(levi, res);
  return static_cast<int>(p[m] - (m > 0 ? p[m - 1] : 0));
}

int mult_in_L(Flavor f, int m, const Parameter& p) {
  const StringDecomposition dec = extract_strings(p);
  return f == Flavor::Even ? mult_sigma_e(m, levi_e(dec).levi) : mult_sigma_o(m, levi_o(dec).levi);
}

bool r_irreducible(const InducedData& data, const Parameter& p) {
  const int n = p.rank();
  const int top_e = p.gtype == GroupType::D ? n / 2 : n;
  for (int m = 0; m <= top_e; ++m)
    if (mult_sigma_e(m, data.levi) != mult_in_L(Flavor::Even, m, p)) return false;
  for (int m = 1; 2 * m <= n; ++m)
    if (mult_sigma_o(m, data.levi) != mult_in_L(Flavor::Odd, m, p)) return false;
  return true;
}

}  // namespace sphunit
