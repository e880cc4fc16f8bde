// intertwine.hpp
//
// Rank-one intertwining factors on W-type models, the long operator, exact
// signatures, and the closed-form scalars for maximal Levi components
// GL(k) x G(n) inside G(k+n), with a matrix oracle.

#pragma once

#include <optional>
#include <vector>

#include "sphunit/matrix.hpp"
#include "sphunit/parameter.hpp"
#include "sphunit/weyl.hpp"
#include "sphunit/wtypes.hpp"

namespace sphunit {

struct ReducedWord {
  std::vector<int> letters;  // w = s_{letters[0]} s_{letters[1]} ...
  Parameter source;
  Parameter target;
};

struct SignatureReport {
  WTag tag = WTag::SigmaE;
  int n = 0;
  int m = 0;
  int matrix_dim = 0;
  int plus = 0, minus = 0, zero = 0;
};

// P_+ + c P_-, c = (1 - <x,a>)/(1 + <x,a>). Throws DomainError("pole").
Matrix simple_op(const WTypeModel& model, int alpha, const Vec& x,
                 CorootConvention conv = CorootConvention::Coroots);

// Product of simple_op along the word; x is the starting point (the
// rightmost factor sees x itself).
Matrix word_operator(const WTypeModel& model, const std::vector<int>& word, const Vec& x,
                     CorootConvention conv = CorootConvention::Coroots);

// Shortest w with w x = -x for x = chamber_dominant(p). Throws
// DomainError("not_hermitian") when no such w exists in W.
ReducedWord minimal_word_to_negative(const Parameter& p);

// gram * (long operator) at the dominant representative of p.
Matrix hermitian_matrix(const WTypeModel& model, const Parameter& p,
                        CorootConvention conv = CorootConvention::Coroots);
SignatureReport form_signature(const WTypeModel& model, const Parameter& p,
                               CorootConvention conv = CorootConvention::Coroots);
std::vector<SignatureReport> all_signatures(const Parameter& p,
                                            CorootConvention conv = CorootConvention::Coroots);
// Multiplicity of the W-type in L(chi): rank of the long operator.
int multiplicity_in_quotient(const WTypeModel& model, const Parameter& p);

// ---- closed forms -------------------------------------------------------

// GL(k) x GL(n) in GL(k+n) on sigma(m, k+n-m).
Rational scalar_gl(int k, int n, int m, const Rational& nu1, const Rational& nu2);

// Offset of n in the sigma_e / sigma_o products: Hecke B 1, C 1/2, D 0.
Rational closed_form_offset(HeckeType h);

Rational scalar_sigma_e(HeckeType h, int k, int n, int m, const Rational& nu);
Rational scalar_sigma_o(HeckeType h, int k, int n, int m, const Rational& nu);
Rational scalar_gl_in_D(int k, int m, const Rational& nu);

// The summary formulas exactly as printed (type B sigma_e with n+1/2, and
// the sigma_o product with the trivial-string offsets 0, 1/2, 1). They
// lose against the oracle; kept for the erratum checks.
Rational scalar_sigma_e_as_printed(HeckeType h, int k, int n, int m, const Rational& nu);
Rational scalar_sigma_o_as_printed(HeckeType h, int k, int n, int m, const Rational& nu);

// ---- oracle -------------------------------------------------------------

// Matrix value of the operator for GL(k) x G(n) in G(k+n) on the W(M)-fixed
// line of the model, at chi = (string of length k with average nu; the
// trivial string of G(n)). nullopt on a pole or when the fixed space is not
// a line.
std::optional<Rational> oracle_scalar(GroupType g, WTag tag, int k, int n, int m, const Rational& nu,
                                      CorootConvention conv = CorootConvention::Coroots);
std::optional<Rational> oracle_scalar_gl(int k, int n, int m, const Rational& nu1, const Rational& nu2);

// Closed form for the group type (converted to its Hecke type).
Rational closed_form(GroupType g, WTag tag, int k, int n, int m, const Rational& nu);

bool oracle_compare(GroupType g, WTag tag, int k, int n, int m, const Rational& nu);

struct OracleCase {
  GroupType gtype = GroupType::B;
  WTag tag = WTag::SigmaE;
  int k = 1, n = 0, m = 0;
  Rational nu;
  Rational oracle, closed;
  bool pass() const { return oracle == closed; }
};

// All k >= 1, n >= 0 with k+n <= max_total, m <= max_m (sigma_o: 1 <= m,
// 2m <= k+n, n >= 1) and nu in `nus`. Points where either side has a pole
// or the fixed space is not a line are skipped.
std::vector<OracleCase> oracle_sweep(GroupType g, int max_total, int max_m, const Vec& nus);
// 1/6, 2/6, ..., count/6.
Vec sixth_grid(int count);

}  // namespace sphunit
