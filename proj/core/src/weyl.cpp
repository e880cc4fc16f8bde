// weyl.cpp

#include "sphunit/weyl.hpp"

#include <algorithm>
#include <cstdlib>

#include "sphunit/errors.hpp"

namespace sphunit {

namespace {

void check_alpha(GroupType g, int n, int alpha) {
  if (alpha < 1 || alpha > num_simple(g, n))
    throw DomainError("bad_index", "simple root index " + std::to_string(alpha) + " out of range");
}

int sgn(int v) { return v < 0 ? -1 : 1; }

// Is c_a e_a + c_b e_b positive? (a != b, or b < 0 for a single term.)
bool positive_root(int a, int ca, int b, int cb) {
  if (b < 0) return ca > 0;
  return a < b ? ca > 0 : cb > 0;
}

}  // namespace

int num_simple(GroupType g, int n) {
  if (n < 1) throw DomainError("bad_rank", "rank must be positive");
  if (g == GroupType::A) return n - 1;
  if (g == GroupType::D && n < 2) throw DomainError("bad_rank", "type D needs rank >= 2");
  return n;
}

Rational coroot_pairing(GroupType g, int alpha, const Vec& x, CorootConvention conv) {
  const int n = static_cast<int>(x.size());
  check_alpha(g, n, alpha);
  if (alpha < n) return x[alpha - 1] - x[alpha];
  switch (g) {
    case GroupType::B:
      return conv == CorootConvention::Coroots ? Rational(2) * x[n - 1] : x[n - 1];
    case GroupType::C:
      return conv == CorootConvention::Coroots ? x[n - 1] : Rational(2) * x[n - 1];
    case GroupType::D:
      return x[n - 2] + x[n - 1];
    case GroupType::A:
      break;
  }
  throw DomainError("bad_index", "no such simple root");
}

Vec reflect(GroupType g, int alpha, const Vec& x) {
  const int n = static_cast<int>(x.size());
  check_alpha(g, n, alpha);
  Vec y = x;
  if (alpha < n) {
    std::swap(y[alpha - 1], y[alpha]);
  } else if (g == GroupType::D) {
    y[n - 2] = -x[n - 1];
    y[n - 1] = -x[n - 2];
  } else {
    y[n - 1] = -x[n - 1];
  }
  return y;
}

SignedPerm SignedPerm::identity(int n) {
  SignedPerm w;
  w.img.resize(n);
  for (int i = 0; i < n; ++i) w.img[i] = i + 1;
  return w;
}

SignedPerm SignedPerm::simple(GroupType g, int n, int alpha) {
  check_alpha(g, n, alpha);
  SignedPerm w = identity(n);
  if (alpha < n) {
    std::swap(w.img[alpha - 1], w.img[alpha]);
  } else if (g == GroupType::D) {
    w.img[n - 2] = -n;
    w.img[n - 1] = -(n - 1);
  } else {
    w.img[n - 1] = -n;
  }
  return w;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (img[i] != i + 1) return false;
  return true;
}

int SignedPerm::num_sign_changes() const {
  return static_cast<int>(std::count_if(img.begin(), img.end(), [](int v) { return v < 0; }));
}

Vec SignedPerm::act(const Vec& x) const {
  if (static_cast<int>(x.size()) != rank()) throw DomainError("shape", "rank mismatch");
  Vec y(x.size());
  for (int i = 0; i < rank(); ++i) {
    const int j = std::abs(img[i]) - 1;
    y[j] = img[i] < 0 ? -x[i] : x[i];
  }
  return y;
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
  SignedPerm w;
  w.img.resize(v.img.size());
  for (std::size_t i = 0; i < v.img.size(); ++i) {
    const int j = std::abs(v.img[i]) - 1;
    w.img[i] = sgn(v.img[i]) * u.img[j];
  }
  return w;
}

bool in_weyl_group(GroupType g, const SignedPerm& w) {
  if (g == GroupType::A) return w.num_sign_changes() == 0;
  if (g == GroupType::D) return w.num_sign_changes() % 2 == 0;
  return true;
}

bool is_right_descent(GroupType g, const SignedPerm& w, int alpha) {
  const int n = w.rank();
  check_alpha(g, n, alpha);
  auto term = [&](int i) { return std::pair<int, int>{std::abs(w.img[i]) - 1, sgn(w.img[i])}; };
  if (alpha < n) {
    auto [a, ca] = term(alpha - 1);
    auto [b, cb] = term(alpha);
    return !positive_root(a, ca, b, -cb);
  }
  if (g == GroupType::D) {
    auto [a, ca] = term(n - 2);
    auto [b, cb] = term(n - 1);
    return !positive_root(a, ca, b, cb);
  }
  auto [a, ca] = term(n - 1);
  return !positive_root(a, ca, -1, 0);
}

int length(GroupType g, const SignedPerm& w) {
  // Count positive roots sent to negative roots.
  const int n = w.rank();
  auto term = [&](int i) { return std::pair<int, int>{std::abs(w.img[i]) - 1, sgn(w.img[i])}; };
  int len = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto [a, ca] = term(i);
      auto [b, cb] = term(j);
      if (!positive_root(a, ca, b, -cb)) ++len;
      if (g != GroupType::A && !positive_root(a, ca, b, cb)) ++len;
    }
    if (g == GroupType::B || g == GroupType::C) {
      auto [a, ca] = term(i);
      if (!positive_root(a, ca, -1, 0)) ++len;
    }
  }
  return len;
}

std::vector<int> reduced_word(GroupType g, const SignedPerm& w) {
  if (!in_weyl_group(g, w)) throw DomainError("not_in_group", "element is not in the Weyl group");
  const int n = w.rank();
  std::vector<int> rev;
  SignedPerm cur = w;
  while (!cur.is_identity()) {
    int found = 0;
    for (int a = 1; a <= num_simple(g, n); ++a)
      if (is_right_descent(g, cur, a)) {
        found = a;
        break;
      }
    if (!found) throw DomainError("internal", "no descent found for non-identity element");
    rev.push_back(found);
    cur = cur * SignedPerm::simple(g, n, found);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

SignedPerm from_word(GroupType g, int n, const std::vector<int>& word) {
  SignedPerm w = SignedPerm::identity(n);
  for (int a : word) w = w * SignedPerm::simple(g, n, a);
  return w;
}

Vec apply_word(GroupType g, const std::vector<int>& word, const Vec& x) {
  Vec y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = reflect(g, *it, y);
  return y;
}

namespace {

void collect_words(GroupType g, const SignedPerm& w, std::vector<int>& suffix,
                   std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  const int n = w.rank();
  for (int a = 1; a <= num_simple(g, n); ++a) {
    if (!is_right_descent(g, w, a)) continue;
    suffix.push_back(a);
    collect_words(g, w * SignedPerm::simple(g, n, a), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> all_reduced_words(GroupType g, const SignedPerm& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_words(g, w, suffix, out);
  return out;
}

SignedPerm shortest_in_coset(GroupType g, SignedPerm w, const Vec& x) {
  const int n = w.rank();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a <= num_simple(g, n); ++a) {
      if (!coroot_pairing(g, a, x).is_zero()) continue;  // s_a must fix x
      if (is_right_descent(g, w, a)) {
        w = w * SignedPerm::simple(g, n, a);
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace sphunit
