#include <doctest.h>

#include "sphunit/errors.hpp"
#include "sphunit/wtypes.hpp"
#include "support.hpp"

using namespace sphunit;
using namespace sphunit::test;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coxeter matrix entry written out from the diagrams, not from weyl.cpp.
int coxeter(GroupType g, int n, int a, int b) {
  if (a == b) return 1;
  if (a > b) std::swap(a, b);
  if (g == GroupType::D && b == n) {
    if (a == n - 1) return 2;
    return a == n - 2 ? 3 : 2;
  }
  if (b == n && a == n - 1 && g != GroupType::A) return 4;
  return b - a == 1 ? 3 : 2;
}

Matrix power(const Matrix& m, int e) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

Rational trace(const Matrix& m) {
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

void check_identities(const WTypeModel& model) {
  const Matrix id = Matrix::identity(model.dim);
  const int k = static_cast<int>(model.gens.size());
  CHECK(model.gram.is_symmetric());
  CHECK(signature(model.gram) == Signature{model.dim, 0, 0});
  for (int a = 1; a <= k; ++a) {
    const Matrix& g = model.gens[a - 1];
    CHECK(g * g == id);
    CHECK(g.transpose() * model.gram * g == model.gram);
    for (int b = a + 1; b <= k; ++b)
      CHECK(power(g * model.gens[b - 1], coxeter(model.gtype, model.n, a, b)) == id);
  }
}

}  // namespace

TEST_CASE("small models") {
  const auto t = build_sigma_e(GroupType::B, 1, 0);
  CHECK(t.dim == 1);
  CHECK(t.gens[0] == Matrix::identity(1));

  const auto r = build_sigma_e(GroupType::B, 2, 1);
  CHECK(r.dim == 2);
  CHECK(r.gens[1] == Matrix::from_rows({V({"1", "0"}), V({"0", "-1"})}));  // sign change on e_2
  CHECK(r.gens[0] == Matrix::from_rows({V({"0", "1"}), V({"1", "0"})}));

  const auto o = build_sigma_o(GroupType::B, 2, 1);
  CHECK(o.dim == 1);
  CHECK(o.gens[0] == Matrix::from_rows({V({"-1"})}));
  CHECK(o.gens[1] == Matrix::identity(1));

  const auto c = build_sigma_o(GroupType::C, 3, 1);
  CHECK(c.dim == 2);
  CHECK(c.gens[2] == Matrix::identity(2));
  check_identities(c);

  CHECK(build_sigma_e(GroupType::B, 3, 2).dim == 3);
  check_identities(build_sigma_e(GroupType::B, 3, 2));
  CHECK(build_sigma_o(GroupType::D, 5, 0).dim == 1);

  CHECK_THROWS_AS(build_sigma_e(GroupType::B, 3, 4), DomainError);
  CHECK_THROWS_AS(build_sigma_o(GroupType::B, 3, 2), DomainError);
}

TEST_CASE("dimensions") {
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = g == GroupType::D ? 2 : 1; n <= 7; ++n) {
      for (int m = 0; m <= n; ++m) CHECK(build_sigma_e(g, n, m).dim == binom(n, m));
      for (int m = 0; 2 * m <= n; ++m) CHECK(build_sigma_o(g, n, m).dim == binom(n, m) - binom(n, m - 1));
      if (n < 2) continue;
      CHECK(build_sigma_o(g, n, 1).dim == n - 1);
      // GL(1) x G(n-1): trivial + reflection + sigma_o(1) inside the induced module.
      CHECK(1 + build_sigma_e(g, n, 1).dim + build_sigma_o(g, n, 1).dim == 2 * n);
    }
}

TEST_CASE("relevant_models") {
  CHECK(relevant_models(GroupType::B, 4).size() == 5 + 2);
  CHECK(relevant_models(GroupType::C, 3).size() == 4 + 1);
  // D keeps sigma_e(m) for m <= n/2 only.
  CHECK(relevant_models(GroupType::D, 4).size() == 3 + 2);
  for (const auto& m : relevant_models(GroupType::D, 5))
    if (m.tag == WTag::SigmaE) CHECK(2 * m.m <= 5);
}

TEST_CASE("involution, braid and Gram invariance for n <= 8, m <= 4") {
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = g == GroupType::D ? 2 : 1; n <= 8; ++n) {
      for (int m = 0; m <= std::min(n, 4); ++m) check_identities(build_sigma_e(g, n, m));
      for (int m = 0; m <= 4 && 2 * m <= n; ++m) check_identities(build_sigma_o(g, n, m));
    }
}

TEST_CASE("traces match the brute-force characters") {
  Gen gen(13);
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = g == GroupType::D ? 2 : 1; n <= 6; ++n)
      for (int trial = 0; trial < 8; ++trial) {
        const SignedPerm w = gen.element(g, n);
        for (int m = 0; m <= n; ++m)
          CHECK(trace(rep_matrix(build_sigma_e(g, n, m), w)) == character_sigma_e(w, m));
        for (int m = 0; 2 * m <= n; ++m)
          CHECK(trace(rep_matrix(build_sigma_o(g, n, m), w)) == character_sigma_o(w, m));
      }
}

TEST_CASE("rep_matrix is a homomorphism") {
  Gen gen(29);
  const auto model = build_sigma_e(GroupType::B, 4, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedPerm u = gen.element(GroupType::B, 4), v = gen.element(GroupType::B, 4);
    CHECK(rep_matrix(model, u * v) == rep_matrix(model, u) * rep_matrix(model, v));
  }
}

TEST_CASE("ktype_label") {
  CHECK(ktype_label(GroupType::C, WTag::SigmaE, 5, 2) == "mu(2^2,0^3)");
  CHECK(ktype_label(GroupType::C, WTag::SigmaO, 5, 2) == "mu(1^2,0^1,-1^2)");
  CHECK(ktype_label(GroupType::B, WTag::SigmaE, 4, 1) == "mu(0^2;+) x mu(2^1,0^1;+)");
  CHECK(ktype_label(GroupType::D, WTag::SigmaE, 4, 0) == "trivial");
  CHECK(ktype_label(GroupType::B, WTag::SigmaO, 4, 0) == "trivial");
}
