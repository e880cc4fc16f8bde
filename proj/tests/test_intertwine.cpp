#include <doctest.h>

#include "sphunit/errors.hpp"
#include "sphunit/intertwine.hpp"
#include "support.hpp"

using namespace sphunit;
using namespace sphunit::test;

namespace {

const Vec kTableNus = V({"1/5", "1/4", "1/3", "1/2", "2/3"});

// Row of the k = 1 table, keyed by Hecke type.
Rational table_e(HeckeType h, int n, const Rational& nu) {
  const Rational a = Rational(n) + closed_form_offset(h);
  return (a - nu) / (a + nu);
}

Rational table_o(HeckeType h, int n, const Rational& nu) {
  switch (h) {
    case HeckeType::B: return -table_e(h, n, nu);
    case HeckeType::C: return table_e(h, n, nu) * (half() - nu) / (half() + nu);
    case HeckeType::D: return table_e(h, n, nu) * (Rational(1) - nu) / (Rational(1) + nu);
  }
  return {};
}

}  // namespace

TEST_CASE("closed-form offsets") {
  CHECK(closed_form_offset(HeckeType::B) == Q("1"));
  CHECK(closed_form_offset(HeckeType::C) == Q("1/2"));
  CHECK(closed_form_offset(HeckeType::D) == Q("0"));
}

TEST_CASE("the k = 1 scalar table, n <= 4") {
  for (HeckeType h : {HeckeType::B, HeckeType::C, HeckeType::D})
    for (int n = 0; n <= 4; ++n)
      for (const Rational& nu : kTableNus) {
        if (h == HeckeType::D && n == 0) continue;
        CHECK(scalar_sigma_e(h, 1, n, 1, nu) == table_e(h, n, nu));
        if (n >= 1) CHECK(scalar_sigma_o(h, 1, n, 1, nu) == table_o(h, n, nu));
      }
}

TEST_CASE("scalar examples") {
  CHECK(scalar_sigma_e(HeckeType::B, 1, 2, 1, Q("1/3")) == Q("4/5"));
  CHECK(scalar_sigma_o(HeckeType::B, 1, 2, 1, Q("1/3")) == Q("-4/5"));
  CHECK(scalar_sigma_e(HeckeType::C, 1, 1, 1, Q("1/4")) == Q("5/7"));
  CHECK(scalar_sigma_o(HeckeType::C, 1, 1, 1, Q("1/4")) == Q("5/21"));
  CHECK(scalar_sigma_e(HeckeType::D, 1, 2, 1, Q("1/2")) == Q("3/5"));
  CHECK(scalar_gl(1, 1, 1, Q("0"), Q("1/2")) == Q("-3"));
  CHECK(scalar_gl(3, 2, 0, Q("1/7"), Q("2/7")) == Q("1"));
  CHECK(scalar_gl_in_D(2, 1, Q("1/4")) == Q("1/3"));
  CHECK(scalar_gl_in_D(5, 0, Q("1/4")) == Q("1"));
  // (G group) -> Hecke type: B and C swap.
  CHECK(closed_form(GroupType::C, WTag::SigmaE, 1, 2, 1, Q("1/3")) == Q("4/5"));
}

TEST_CASE("scalar_gl poles only on integral overlaps") {
  // Strings (nu1 - (k-1)/2 .. nu1 + (k-1)/2) and the same for nu2.
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= std::min(k, n); ++m)
        for (int a = -12; a <= 12; ++a) {
          const Rational nu1(a, 4), nu2(0);
          try {
            (void)scalar_gl(k, n, m, nu1, nu2);
          } catch (const DomainError&) {
            // A zero denominator needs an integral difference of the string ends.
            const Rational d = nu1 - nu2 + Rational(k + n, 2);
            CHECK(d.frac() == Rational(0));
          }
        }
}

TEST_CASE("closed forms agree with the matrix oracle") {
  const Vec grid = sixth_grid(5);
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D}) {
    const auto cases = oracle_sweep(g, 5, 3, grid);
    CHECK(cases.size() > 100);
    for (const auto& c : cases)
      CHECK_MESSAGE(c.pass(), to_char(g), " ", to_string(c.tag), " k=", c.k, " n=", c.n, " m=", c.m, " nu=", c.nu);
  }
  CHECK(oracle_compare(GroupType::B, WTag::SigmaE, 2, 1, 0, Q("1/3")));
}

TEST_CASE("printed closed forms lose against the oracle") {
  int lost_e = 0, lost_o = 0;
  for (const auto& c : oracle_sweep(GroupType::C, 5, 3, sixth_grid(5))) {
    const HeckeType h = hecke_of(GroupType::C);
    REQUIRE(h == HeckeType::B);
    try {
      if (c.tag == WTag::SigmaE && scalar_sigma_e_as_printed(h, c.k, c.n, c.m, c.nu) != c.oracle) ++lost_e;
      if (c.tag == WTag::SigmaO && scalar_sigma_o_as_printed(h, c.k, c.n, c.m, c.nu) != c.oracle) ++lost_o;
    } catch (const DomainError&) {
    }
  }
  CHECK(lost_e > 0);
  CHECK(lost_o > 0);
  CHECK(scalar_sigma_e_as_printed(HeckeType::B, 1, 2, 1, Q("1/3")) != Q("4/5"));
}

TEST_CASE("simple_op") {
  const auto refl = build_sigma_e(GroupType::B, 1, 1);
  CHECK(simple_op(refl, 1, V({"0"})) == Matrix::identity(1));
  for (const char* nu : {"1/7", "1/3", "3/5"}) {
    const Rational v = Q(nu);
    CHECK(simple_op(refl, 1, Vec{v})(0, 0) == (Rational(1) - 2 * v) / (Rational(1) + 2 * v));
    // Roots instead of coroots halve the pairing on the short root.
    CHECK(simple_op(refl, 1, Vec{v}, CorootConvention::Roots)(0, 0) == (Rational(1) - v) / (Rational(1) + v));
  }
  CHECK_THROWS_AS(simple_op(refl, 1, V({"-1/2"})), DomainError);
  const auto triv = build_sigma_e(GroupType::C, 3, 0);
  for (int a = 1; a <= 3; ++a) CHECK(simple_op(triv, a, V({"1/3", "2", "5/7"})) == Matrix::identity(1));
}

TEST_CASE("minimal_word_to_negative") {
  CHECK(minimal_word_to_negative(P(GroupType::B, "1/3")).letters == std::vector<int>{1});
  CHECK(minimal_word_to_negative(P(GroupType::B, "1/4,1/3")).letters.size() == 4);
  CHECK(minimal_word_to_negative(P(GroupType::D, "1/4,1/3")).letters.size() == 2);
  CHECK(minimal_word_to_negative(P(GroupType::C, "0,0")).letters.empty());
  CHECK_THROWS_AS(minimal_word_to_negative(P(GroupType::D, "1/4,1/3,1/5")), DomainError);

  // Against a BFS over W: the shortest u with u x = -x.
  Gen gen(31);
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = 2; n <= 4; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const Parameter p{g, gen.vec(n, 4, {1, 2, 3})};
        if (!is_hermitian(p)) continue;
        const ReducedWord rw = minimal_word_to_negative(p);
        Vec neg = rw.source.coords;
        for (auto& c : neg) c = -c;
        CHECK(apply_word(g, rw.letters, rw.source.coords) == neg);
        CHECK(rw.target.coords == neg);
        int best = 1 << 30;
        for (const auto& w : weyl_elements(g, n))
          if (w.act(rw.source.coords) == neg) best = std::min(best, length(g, w));
        CHECK(static_cast<int>(rw.letters.size()) == best);
      }
}

TEST_CASE("form_signature examples") {
  for (const auto& model : relevant_models(GroupType::B, 3)) {
    const auto r = form_signature(model, P(GroupType::B, "0,0,0"));
    CHECK(r.plus == model.dim);
    CHECK(r.minus == 0);
  }
  for (const auto& r : all_signatures(P(GroupType::B, "1/4,1/3"))) {
    CHECK(r.minus == 0);
    CHECK(r.plus + r.minus + r.zero == r.matrix_dim);
  }
  bool negative = false;
  for (const auto& r : all_signatures(P(GroupType::B, "1/4,3/4"))) negative = negative || r.minus > 0;
  CHECK(negative);
  CHECK_THROWS_AS(all_signatures(P(GroupType::D, "1/4,1/3,1/5")), DomainError);
}

TEST_CASE("the trivial W-type always has scalar 1") {
  Gen gen(37);
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = 2; n <= 4; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const Parameter p{g, gen.vec(n, 6, {1, 2, 3, 4})};
        if (!is_hermitian(p)) continue;
        const Matrix h = hermitian_matrix(build_sigma_e(g, n, 0), p);
        CHECK(h == Matrix::identity(1));
      }
}

TEST_CASE("gram * M is symmetric for hermitian parameters of rank <= 5") {
  Gen gen(43);
  int checked = 0;
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = 2; n <= 5; ++n)
      for (int trial = 0; trial < 6; ++trial) {
        const Parameter p{g, gen.vec(n, 6, {1, 2, 3, 4})};
        if (!is_hermitian(p)) continue;
        for (const auto& model : relevant_models(g, n)) {
          CHECK(hermitian_matrix(model, p).is_symmetric());
          ++checked;
        }
      }
  CHECK(checked > 50);
}

TEST_CASE("the long operator does not depend on the reduced word") {
  Gen gen(47);
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = 2; n <= 3; ++n)
      for (int trial = 0; trial < 3; ++trial) {
        Vec x = gen.vec(n, 5, {2, 3});
        if (g == GroupType::D && n == 3) x[2] = Rational(0);
        const Parameter p{g, x};
        if (!is_hermitian(p)) continue;
        const ReducedWord rw = minimal_word_to_negative(p);
        const auto words = all_reduced_words(g, from_word(g, n, rw.letters));
        CHECK(!words.empty());
        for (const auto& model : relevant_models(g, n)) {
          const Matrix ref = word_operator(model, rw.letters, rw.source.coords);
          for (const auto& w : words) {
            const Matrix m = word_operator(model, w, rw.source.coords);
            CHECK(m == ref);
            CHECK(signature(model.gram * m) == signature(model.gram * ref));
          }
        }
      }
}

TEST_CASE("multiplicity_in_quotient on the trivial and reflection types") {
  // Trivial W-type always survives.
  CHECK(multiplicity_in_quotient(build_sigma_e(GroupType::B, 2, 0), P(GroupType::B, "1/2,3/2")) == 1);
  // At the trivial representation only the trivial W-type survives.
  CHECK(multiplicity_in_quotient(build_sigma_e(GroupType::B, 2, 1), P(GroupType::B, "1/2,3/2")) == 0);
  CHECK(multiplicity_in_quotient(build_sigma_e(GroupType::B, 2, 1), P(GroupType::B, "1/4,1/3")) == 2);
}
