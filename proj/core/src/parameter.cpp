// parameter.cpp
//
// String extraction follows the Step 0 / Step 1 / Step 2 procedure:
// pad zeros, peel off the strings through 0 (C, D) or 1/2 (B), then split
// what is left into maximal strings class by class.

#include "sphunit/parameter.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sphunit/errors.hpp"

namespace sphunit {

std::string to_string(const Parameter& p) {
  std::ostringstream os;
  os << to_char(p.gtype) << "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? "," : "") << p.coords[i];
  os << ")";
  return os.str();
}

Parameter parse_parameter(const std::string& text, GroupType g) {
  Parameter p{g, {}};
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) p.coords.push_back(Rational::parse(tok));
  if (!text.empty() && text.back() == ',') throw DomainError("bad_token", "trailing comma");
  if (p.coords.empty()) throw DomainError("empty", "empty parameter");
  if (g == GroupType::D && p.coords.size() < 2) throw DomainError("bad_rank", "type D needs rank >= 2");
  return p;
}

namespace {

int negatives(const Vec& x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](const Rational& r) { return r.sign() < 0; }));
}

bool has_zero(const Vec& x) {
  return std::any_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); });
}

Vec abs_sorted(const Vec& x) {
  Vec y;
  for (const auto& r : x) y.push_back(r.abs());
  std::sort(y.begin(), y.end());
  return y;
}

}  // namespace

Parameter dominant_form(const Parameter& p) {
  Parameter q{p.gtype, {}};
  if (p.gtype == GroupType::A) {
    q.coords = p.coords;
    std::sort(q.coords.begin(), q.coords.end(), std::greater<>());
    return q;
  }
  q.coords = abs_sorted(p.coords);
  if (p.gtype == GroupType::D && !has_zero(p.coords) && negatives(p.coords) % 2 == 1)
    q.coords.front() = -q.coords.front();
  return q;
}

Vec chamber_dominant(GroupType g, const Vec& x) {
  if (g == GroupType::A) {
    Vec y = x;
    std::sort(y.begin(), y.end(), std::greater<>());
    return y;
  }
  Vec y = abs_sorted(x);
  std::reverse(y.begin(), y.end());
  if (g == GroupType::D && !has_zero(x) && negatives(x) % 2 == 1) y.back() = -y.back();
  return y;
}

bool is_hermitian(const Parameter& p) {
  switch (p.gtype) {
    case GroupType::A: {
      Vec a = p.coords, b;
      for (const auto& r : p.coords) b.push_back(-r);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }
    case GroupType::B:
    case GroupType::C:
      return true;
    case GroupType::D:
      return has_zero(p.coords) || p.rank() % 2 == 0;
  }
  return false;
}

std::vector<Rational> StringRecord::entries() const {
  std::vector<Rational> e;
  for (Rational v = start; v <= end; v += 1) e.push_back(v);
  return e;
}

std::vector<StringRecord> StringDecomposition::step1() const {
  std::vector<StringRecord> out;
  for (const auto& s : strings)
    if (s.origin == Origin::Step1) out.push_back(s);
  return out;
}

std::vector<StringRecord> StringDecomposition::step2() const {
  std::vector<StringRecord> out;
  for (const auto& s : strings)
    if (s.origin == Origin::Step2) out.push_back(s);
  return out;
}

StringRecord canonical_string(GroupType g, const Rational& start, int len) {
  // Lattice for f: Z + 1/2 in type B, Z otherwise.
  const Rational shift = g == GroupType::B ? half() : Rational(0);
  auto offset = [&](const Rational& s) { return (s - shift).frac(); };
  Rational a = start, b = start + (len - 1);
  Rational tau = offset(a);
  if (tau > half()) {
    std::tie(a, b) = std::pair{-b, -a};
    tau = offset(a);
  } else if (tau == half() && a.abs() < b.abs()) {
    std::tie(a, b) = std::pair{-b, -a};
  }
  StringRecord r;
  r.start = a;
  r.end = b;
  r.nu = (a + b) / 2;
  r.tau = tau;
  r.origin = Origin::Step2;
  r.glsize = len;
  return r;
}

namespace {

using Counts = std::map<Rational, int>;

void take(Counts& c, const Rational& v) {
  auto it = c.find(v);
  if (it == c.end() || it->second == 0) throw DomainError("internal", "string extraction consumed a missing value");
  if (--it->second == 0) c.erase(it);
}

int have(const Counts& c, const Rational& v) {
  auto it = c.find(v);
  return it == c.end() ? 0 : it->second;
}

// Longest string starting at the smallest value, repeatedly.
std::vector<std::pair<Rational, int>> gl_extract(Counts c) {
  std::vector<std::pair<Rational, int>> out;
  while (!c.empty()) {
    Rational s = c.begin()->first;
    int len = 0;
    for (Rational v = s; have(c, v) > 0; v += 1) {
      take(c, v);
      ++len;
    }
    out.emplace_back(s, len);
  }
  return out;
}

// Symmetric class (values congruent to -values mod 1): first the strings
// crossing zero, then ordinary strings on what remains.
std::vector<std::pair<Rational, int>> symmetric_extract(Counts c, bool integral) {
  std::vector<std::pair<Rational, int>> out;
  const Rational lo = integral ? Rational(0) : half();
  const int need = integral ? 1 : 2;
  while (have(c, lo) >= need) {
    // entries 1..p (or 1/2..p) are used twice, p+1..q once.
    Rational p = integral ? Rational(0) : half();
    while (have(c, p + 1) >= 2) p += 1;
    Rational q = p;
    while (have(c, q + 1) >= 1) q += 1;
    if (integral) take(c, 0);
    for (Rational v = integral ? Rational(1) : half(); v <= p; v += 1) {
      take(c, v);
      take(c, v);
    }
    for (Rational v = p + 1; v <= q; v += 1) take(c, v);
    const int len = ((q + p) + 1).to_long();
    out.emplace_back(-p, len);
  }
  auto rest = gl_extract(c);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

StringDecomposition extract_type_a(const Parameter& p) {
  StringDecomposition dec;
  dec.gtype = GroupType::A;
  std::map<Rational, Counts> classes;
  for (const auto& x : p.coords) ++classes[x.frac()][x];
  std::vector<int> parts;
  for (auto& [key, c] : classes)
    for (auto [s, len] : gl_extract(c)) {
      StringRecord r;
      r.start = s;
      r.end = s + (len - 1);
      r.nu = (r.start + r.end) / 2;
      r.tau = key;
      r.glsize = len;
      r.origin = Origin::Step2;
      dec.strings.push_back(r);
      dec.nu_vector.push_back(r.nu);
      parts.push_back(len);
    }
  std::sort(parts.begin(), parts.end());
  dec.orbit = OrbitPartition{parts, GroupType::A, std::nullopt};
  dec.hermitian = is_hermitian(p);
  return dec;
}

}  // namespace

StringDecomposition extract_strings(const Parameter& p) {
  if (p.coords.empty()) throw DomainError("empty", "empty parameter");
  if (p.gtype == GroupType::A) return extract_type_a(p);
  const GroupType g = p.gtype;
  StringDecomposition dec;
  dec.gtype = g;
  dec.hermitian = is_hermitian(p);

  Counts c;
  for (const auto& x : p.coords) ++c[x.abs()];

  // Step 0.
  const int z = have(c, 0);
  if (g == GroupType::C) c[Rational(0)] = 2 * z + 1;
  if (g == GroupType::D && z > 0) c[Rational(0)] = 2 * z;

  // Step 1.
  std::vector<int> parts;
  const Rational base = g == GroupType::B ? half() : Rational(0);
  while (have(c, base) > 0) {
    int len = 0;
    for (Rational v = base; have(c, v) > 0; v += 1) {
      take(c, v);
      dec.residual.push_back(v);
      ++len;
    }
    StringRecord r;
    r.start = base;
    r.end = base + (len - 1);
    r.origin = Origin::Step1;
    r.glsize = len;
    dec.strings.push_back(r);
    parts.push_back(g == GroupType::B ? 2 * len : 2 * len - 1);
  }

  // Step 2, class by class.
  std::map<Rational, Counts> classes;
  for (const auto& [v, k] : c) {
    Rational f = v.frac();
    Rational key = std::min(f, Rational(1) - f);
    if (f.is_zero()) key = 0;
    Rational signed_v = (key.is_zero() || key == half() || f == key) ? v : -v;
    classes[key][signed_v] += k;
  }
  std::vector<StringRecord> step2;
  for (auto& [key, cls] : classes) {
    std::vector<std::pair<Rational, int>> raw;
    if (key.is_zero()) raw = symmetric_extract(cls, true);
    else if (key == half()) raw = symmetric_extract(cls, false);
    else raw = gl_extract(cls);
    for (auto [s, len] : raw) step2.push_back(canonical_string(g, s, len));
  }
  for (const auto& r : step2) {
    dec.strings.push_back(r);
    dec.nu_vector.push_back(r.nu);
    parts.push_back(r.glsize);
    parts.push_back(r.glsize);
  }
  std::sort(parts.begin(), parts.end());
  dec.orbit = OrbitPartition{parts, g, std::nullopt};

  if (g == GroupType::D && !has_zero(p.coords)) {
    int out_neg = 0;
    for (const auto& r : step2)
      for (const auto& e : r.entries())
        if (e.sign() < 0) ++out_neg;
    const bool odd = (out_neg + negatives(p.coords)) % 2 == 1;
    if (dec.orbit.very_even()) dec.orbit.label = odd ? DLabel::II : DLabel::I;
    else dec.twisted = odd;
  } else if (dec.orbit.very_even()) {
    dec.orbit.label = DLabel::I;
  }
  return dec;
}

namespace {

bool integral_difference(const Segment& x, const Segment& y) { return (x.first - y.first).is_integer(); }

bool contains(const Segment& outer, const Segment& inner) {
  return outer.first <= inner.first && inner.second <= outer.second;
}

}  // namespace

bool is_nested(const std::vector<Segment>& strings) {
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      const auto& x = strings[i];
      const auto& y = strings[j];
      if (!integral_difference(x, y)) continue;
      if (contains(x, y) || contains(y, x)) continue;
      if (x.second + 1 < y.first || y.second + 1 < x.first) continue;
      return false;
    }
  return true;
}

bool is_strongly_nested(const std::vector<Segment>& strings) {
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      const auto& x = strings[i];
      const auto& y = strings[j];
      if (!integral_difference(x, y)) continue;
      if (!contains(x, y) && !contains(y, x)) return false;
    }
  return true;
}

Vec reconstruct(const StringDecomposition& dec) {
  Counts c;
  for (const auto& s : dec.strings)
    for (const auto& e : s.entries()) ++c[e.abs()];
  const int z = have(c, 0);
  if (dec.gtype == GroupType::C) c[Rational(0)] = (z - 1) / 2;
  if (dec.gtype == GroupType::D) c[Rational(0)] = z / 2;
  Vec out;
  for (const auto& [v, k] : c)
    for (int i = 0; i < k; ++i) out.push_back(v);
  return out;
}

}  // namespace sphunit
