// wtypes.hpp
//
// Matrix models of the relevant Weyl group representations.
//
//   sigma_e(m): sigma[(n-m),(m)], realized on squarefree monomials
//               e_S = prod_{i in S} e_i with |S| = m. A signed permutation
//               sends e_S to (product of the signs on S) e_{pi(S)}.
//   sigma_o(m): sigma[(n-m,m),(0)], 0 <= m <= n/2, the two-row Specht
//               module in y_i = e_i^2 (sign changes act trivially). Basis:
//               polytabloids of standard tableaux, sitting inside the
//               permutation module on m-subsets.
//
// For type A the sigma_o construction gives the two-row Specht module of
// S_n, used by the GL oracle.

#pragma once

#include <string>
#include <vector>

#include "sphunit/matrix.hpp"
#include "sphunit/types.hpp"
#include "sphunit/weyl.hpp"

namespace sphunit {

enum class WTag { SigmaE, SigmaO };

std::string to_string(WTag t);

struct WTypeModel {
  WTag tag = WTag::SigmaE;
  GroupType gtype = GroupType::B;
  int n = 0;
  int m = 0;
  std::vector<Matrix> gens;  // gens[a-1] for simple letter a
  Matrix gram;
  int dim = 0;
};

WTypeModel build_sigma_e(GroupType g, int n, int m);
WTypeModel build_sigma_o(GroupType g, int n, int m);

// All relevant models for rank n: sigma_e(0..n) and sigma_o(1..n/2).
// For D, sigma_e(m) and sigma_e(n-m) restrict to the same W(D) type;
// only m <= n/2 is kept.
std::vector<WTypeModel> relevant_models(GroupType g, int n);

Matrix rep_matrix(const WTypeModel& model, const SignedPerm& w);

// Brute-force character values, independent of the matrices.
Rational character_sigma_e(const SignedPerm& w, int m);
Rational character_sigma_o(const SignedPerm& w, int m);

// Highest weight label of the matching relevant K-type.
std::string ktype_label(GroupType g, WTag tag, int n, int m);

}  // namespace sphunit
