// support.hpp - helpers shared by the test executables.
#pragma once

#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "sphunit/parameter.hpp"
#include "sphunit/weyl.hpp"

namespace sphunit::test {

inline Rational Q(const char* s) { return Rational::parse(s); }

inline Vec V(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* x : xs) v.push_back(Rational::parse(x));
  return v;
}

inline Parameter P(GroupType g, const std::string& s) { return parse_parameter(s, g); }

// Every element of W(g) of rank n, built by closure under simple
// reflections. Independent of length/reduced-word code.
inline std::vector<SignedPerm> weyl_elements(GroupType g, int n) {
  std::set<SignedPerm> seen{SignedPerm::identity(n)};
  std::vector<SignedPerm> todo{SignedPerm::identity(n)};
  while (!todo.empty()) {
    const SignedPerm w = todo.back();
    todo.pop_back();
    for (int a = 1; a <= num_simple(g, n); ++a) {
      const SignedPerm u = SignedPerm::simple(g, n, a) * w;
      if (seen.insert(u).second) todo.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::set<Vec> weyl_orbit(GroupType g, const Vec& x) {
  std::set<Vec> out;
  for (const auto& w : weyl_elements(g, static_cast<int>(x.size()))) out.insert(w.act(x));
  return out;
}

// Fixed-seed source of small rationals.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational(int max_num, std::vector<int> dens) {
    const int d = dens[uniform(0, static_cast<int>(dens.size()) - 1)];
    return Rational(uniform(-max_num, max_num), d);
  }
  Vec vec(int n, int max_num, std::vector<int> dens) {
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(rational(max_num, dens));
    return v;
  }
  SignedPerm element(GroupType g, int n) {
    SignedPerm w = SignedPerm::identity(n);
    for (int i = 0; i < 3 * n * n; ++i) w = SignedPerm::simple(g, n, uniform(1, num_simple(g, n))) * w;
    return w;
  }
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace sphunit::test

namespace doctest {
template <>
struct StringMaker<sphunit::Rational> {
  static String convert(const sphunit::Rational& r) { return r.str().c_str(); }
};
template <>
struct StringMaker<sphunit::Vec> {
  static String convert(const sphunit::Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return (s + ")").c_str();
  }
};
template <>
struct StringMaker<std::vector<int>> {
  static String convert(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return (s + ")").c_str();
  }
};
}  // namespace doctest
