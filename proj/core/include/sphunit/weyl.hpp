// weyl.hpp
//
// Signed permutations, simple reflections and reduced words for the Weyl
// groups of types A, B, C, D acting on coordinate vectors.
//
// Simple roots: e_i - e_{i+1} for i < n, then e_n (B), 2e_n (C) or
// e_{n-1} + e_n (D). Letters are 1-based. The positive chamber is
// x_1 >= x_2 >= ... (decreasing).

#pragma once

#include <vector>

#include "sphunit/matrix.hpp"
#include "sphunit/types.hpp"

namespace sphunit {

enum class CorootConvention { Coroots, Roots };

// Number of simple reflections for a group of the given rank.
int num_simple(GroupType g, int n);

// <x, alpha_i^vee>. With Roots the B and C special pairings are swapped
// (kept for audit only).
Rational coroot_pairing(GroupType g, int alpha, const Vec& x,
                        CorootConvention conv = CorootConvention::Coroots);

// s_alpha applied to coordinates.
Vec reflect(GroupType g, int alpha, const Vec& x);

// w(e_i) = sign * e_j stored as img[i] = sign * (j+1).
struct SignedPerm {
  std::vector<int> img;

  static SignedPerm identity(int n);
  static SignedPerm simple(GroupType g, int n, int alpha);

  int rank() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  int num_sign_changes() const;
  Vec act(const Vec& x) const;
  friend SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);  // u after v
  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

bool in_weyl_group(GroupType g, const SignedPerm& w);
bool is_right_descent(GroupType g, const SignedPerm& w, int alpha);
int length(GroupType g, const SignedPerm& w);
// w = s_{word[0]} s_{word[1]} ... ; minimal length.
std::vector<int> reduced_word(GroupType g, const SignedPerm& w);
SignedPerm from_word(GroupType g, int n, const std::vector<int>& word);
Vec apply_word(GroupType g, const std::vector<int>& word, const Vec& x);
// Every reduced word of w. Exponential; meant for small ranks.
std::vector<std::vector<int>> all_reduced_words(GroupType g, const SignedPerm& w);
// Minimal-length element of {u : u x = y} given one such element w.
SignedPerm shortest_in_coset(GroupType g, SignedPerm w, const Vec& x);

}  // namespace sphunit
