#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sphunit/errors.hpp"
#include "sphunit/tableaux.hpp"
#include "support.hpp"

using namespace sphunit;
using namespace sphunit::test;

namespace {

SignedTableau tab(TabKind k, std::vector<Row> rows, std::optional<DLabel> l = std::nullopt) {
  SignedTableau t{k, std::move(rows), l};
  t.canonicalize();
  return t;
}

void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = std::min(n, max); a >= 1; --a) {
    cur.push_back(a);
    partitions(n - a, a, cur, out);
    cur.pop_back();
  }
}

bool shape_ok(TabKind k, const std::vector<int>& p) {
  if (k == TabKind::u) return true;
  for (int a : p) {
    const bool paired = k == TabKind::sp ? a % 2 == 1 : a % 2 == 0;
    if (paired && std::count(p.begin(), p.end(), a) % 2 == 1) return false;
  }
  return true;
}

// Every tableau of the kind with size <= max_size.
std::vector<SignedTableau> all_tableaux(TabKind k, int max_size) {
  std::vector<SignedTableau> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::vector<int>> ps;
    std::vector<int> cur;
    partitions(n, n, cur, ps);
    for (const auto& p : ps)
      if (shape_ok(k, p))
        for (auto& t : enumerate_real_forms(k, p)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<int> increasing(std::vector<int> p) {
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("signature_of") {
  CHECK(signature_of(tab(TabKind::sp, {{2, +1}, {2, -1}})) == std::pair{2, 2});
  CHECK(signature_of(tab(TabKind::so, {{3, +1}, {1, +1}, {1, -1}})) == std::pair{3, 2});
  CHECK(signature_of(tab(TabKind::u, {{1, +1}})) == std::pair{1, 0});
}

TEST_CASE("validity") {
  CHECK(is_valid(tab(TabKind::sp, {{1, +1}, {1, -1}})));
  CHECK_FALSE(is_valid(tab(TabKind::sp, {{1, +1}, {1, +1}})));
  CHECK_FALSE(is_valid(tab(TabKind::sp, {{3, +1}})));
  CHECK(is_valid(tab(TabKind::so, {{3, +1}})));
  CHECK_FALSE(is_valid(tab(TabKind::so, {{2, +1}, {2, +1}})));
  CHECK(is_valid(tab(TabKind::so, {{2, +1}, {2, -1}}, DLabel::II)));
}

TEST_CASE("enumerate_real_forms") {
  SUBCASE("so (1,1,2,2,3), signature (5,4)") {
    const auto forms = enumerate_real_forms(TabKind::so, {1, 1, 2, 2, 3}, std::pair{5, 4});
    std::set<std::string> s;
    for (const auto& t : forms) s.insert(t.str());
    // Two, not three: the remaining picture has signature (6,3).
    CHECK(s == std::set<std::string>{"+-+/+-/-+/+/-", "-+-/+-/-+/+/+"});
    CHECK(signature_of(tab(TabKind::so, {{3, +1}, {2, +1}, {2, -1}, {1, +1}, {1, +1}})) == std::pair{6, 3});
  }
  SUBCASE("sp (2,2)") {
    const auto forms = enumerate_real_forms(TabKind::sp, {2, 2});
    REQUIRE(forms.size() == 3);
    CHECK(forms[0].str() == "+-/+-");
    CHECK(forms[1].str() == "+-/-+");
    CHECK(forms[2].str() == "-+/-+");
  }
  SUBCASE("so all-even: I and II copies") {
    const auto forms = enumerate_real_forms(TabKind::so, {2, 2});
    REQUIRE(forms.size() == 2);
    CHECK(forms[0].label == DLabel::I);
    CHECK(forms[1].label == DLabel::II);
    CHECK(forms[0].rows == forms[1].rows);
  }
  CHECK_THROWS_AS(enumerate_real_forms(TabKind::sp, {1, 2}), DomainError);
  CHECK_THROWS_AS(enumerate_real_forms(TabKind::so, {2}), DomainError);
  CHECK(enumerate_real_forms(TabKind::u, {1, 1}).size() == 3);
}

TEST_CASE("enumerated tableaux are valid, distinct and canonical") {
  for (TabKind k : {TabKind::u, TabKind::sp, TabKind::so}) {
    const auto all = all_tableaux(k, 7);
    std::set<std::string> seen;
    for (const auto& t : all) {
      CHECK(is_valid(t));
      SignedTableau c = t;
      c.canonicalize();
      CHECK(c == t);
      const std::string key = t.str() + (t.label ? (*t.label == DLabel::I ? " I" : " II") : "");
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("theta_induce examples") {
  const auto u = tab(TabKind::u, {{2, +1}, {2, -1}});
  CHECK(theta_induce(TabKind::u, {1, 1}, u).str() == "+-+/-+-");
  // Nothing to extend: new rows of length 1.
  CHECK(theta_induce(TabKind::u, {2, 0}, SignedTableau{TabKind::u, {}, {}}).str() == "+/+");
  const auto sp = theta_induce(TabKind::sp, {1, 1}, tab(TabKind::sp, {{1, +1}, {1, -1}}), Side::end);
  CHECK(is_valid(sp));
  CHECK(sp.size() == 6);
  const auto zero_so = theta_induce(TabKind::so, {1, 0}, tab(TabKind::so, {{1, +1}, {1, +1}, {1, -1}}));
  CHECK(is_valid(zero_so));
  CHECK(signature_of(zero_so) == std::pair{4, 1});
  const auto sp4 = theta_induce(TabKind::sp, {1, 1}, tab(TabKind::sp, {{1, +1}, {1, -1}, {1, +1}, {1, -1}}), Side::end);
  CHECK(sp4.str() == "+-+/-+-/+/-");
  CHECK(theta_induce(TabKind::sp, {1, 1}, tab(TabKind::sp, {{2, +1}, {2, -1}}), Side::end).str() == "+-+-/-+-+");
}

TEST_CASE("theta_induce outputs are valid with the expected size and signature") {
  for (TabKind k : {TabKind::u, TabKind::sp, TabKind::so})
    for (const auto& t : all_tableaux(k, 6))
      for (int ap = 0; ap <= 2; ++ap)
        for (int am = 0; am + ap <= 3; ++am)
          for (Side side : {Side::beginning, Side::end}) {
            if (ap + am == 0) continue;
            const auto r = theta_induce(k, {ap, am}, t, side);
            CHECK_MESSAGE(is_valid(r), t.str(), " + (", ap, ",", am, ")");
            const auto [p, q] = signature_of(t);
            const auto [p2, q2] = signature_of(r);
            if (k == TabKind::u) {
              CHECK(r.size() == t.size() + ap + am);
              CHECK(std::pair{p2, q2} == std::pair{p + ap, q + am});
            } else {
              CHECK(r.size() == t.size() + 2 * (ap + am));
              if (k == TabKind::so) CHECK(std::pair{p2, q2} == std::pair{p + 2 * ap, q + 2 * am});
              else CHECK(p2 == q2);
            }
          }
}

TEST_CASE("rho_induce examples") {
  CHECK(rho_induce(TabKind::u, 1, tab(TabKind::u, {{1, +1}, {1, -1}})).str() == "+-+/-");
  // so, an even pair met with d even: the pair grows by one each.
  const auto so = rho_induce(TabKind::so, 2, tab(TabKind::so, {{3, +1}, {2, +1}, {2, -1}}));
  CHECK(is_valid(so));
  CHECK(increasing(so.partition()) == std::vector<int>{3, 3, 5});
  // sp, d odd ending on an odd pair: that pair grows by one each.
  const auto sp = rho_induce(TabKind::sp, 1, tab(TabKind::sp, {{1, +1}, {1, -1}}));
  CHECK(is_valid(sp));
  CHECK(increasing(sp.partition()) == std::vector<int>{2, 2});
  // Labels carry through.
  const auto d = rho_induce(TabKind::so, 2, tab(TabKind::so, {{2, +1}, {2, -1}}, DLabel::II));
  CHECK(d.label == DLabel::II);
}

TEST_CASE("rho_induce matches column addition plus collapse, sizes <= 10") {
  int checked = 0;
  for (TabKind k : {TabKind::u, TabKind::sp, TabKind::so})
    for (const auto& t : all_tableaux(k, 8))
      for (int d = 1; 2 * d + t.size() <= 10; ++d) {
        const auto r = rho_induce(k, d, t);
        CHECK(is_valid(r));
        CHECK(r.size() == t.size() + 2 * d);
        std::vector<int> expect = oracle::add_two(t.partition(), d);
        if (k != TabKind::u) expect = oracle::collapse(k == TabKind::sp, expect);
        CHECK_MESSAGE(oracle::desc(r.partition()) == expect, t.str(), " d=", d);
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("collapse and transpose agree with the independent versions") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<std::vector<int>> ps;
    std::vector<int> cur;
    partitions(n, n, cur, ps);
    for (const auto& p : ps) {
      CHECK(transpose(p) == oracle::transpose(p));
      if (n % 2 == 0) CHECK(collapse(TabKind::sp, p) == oracle::collapse(true, p));
      CHECK(collapse(TabKind::so, p) == oracle::collapse(false, p));
    }
  }
  CHECK(oracle::collapse(true, {3, 1}) == std::vector<int>{2, 2});
  CHECK(oracle::collapse(false, {4, 2, 2, 1}) == std::vector<int>{3, 3, 1, 1, 1});
}

TEST_CASE("split_form") {
  CHECK(split_form(GroupType::B, {1, 1, 2, 2, 3}).str() == "+-+/+-/-+/+/-");
  CHECK(split_form(GroupType::C, {2, 2}).str() == "+-/-+");
  CHECK(split_form(GroupType::B, {1, 1, 3}).str() == "+-+/+/-");
  CHECK_THROWS_AS(split_form(GroupType::D, {1, 3, 3, 5}), DomainError);
  for (GroupType g : {GroupType::B, GroupType::C, GroupType::D})
    for (int n = 1; n <= 5; ++n)
      for (const auto& o : all_orbits(g, n)) {
        SignedTableau s;
        try {
          s = split_form(g, o.parts);
        } catch (const DomainError&) {
          continue;
        }
        CHECK(is_valid(s));
        const auto [p, q] = signature_of(s);
        CHECK(std::abs(p - q) <= 1);
      }
}

TEST_CASE("dual columns") {
  CHECK(dual_column_list({2}) == std::vector<int>{3});
  CHECK(dual_columns(make_orbit(GroupType::B, {2})).parts == std::vector<int>{1, 1, 1});
  CHECK(dual_column_list({2, 4, 6}) == std::vector<int>{7, 3, 3});
  CHECK(dual_columns(make_orbit(GroupType::B, {2, 4, 6})).parts == std::vector<int>{1, 1, 1, 1, 3, 3, 3});
  CHECK(dual_column_list({2, 4}) == std::vector<int>{5, 1, 1});
  CHECK(dual_columns(make_orbit(GroupType::B, {2, 4})).parts == std::vector<int>{1, 1, 1, 1, 3});
  CHECK_THROWS_AS(dual_columns(make_orbit(GroupType::B, {2, 2})), DomainError);
}
