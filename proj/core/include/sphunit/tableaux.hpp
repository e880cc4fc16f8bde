// tableaux.hpp
//
// Signed tableaux for real nilpotent orbits of u(p,q), sp(2n,R), so(p,q),
// theta- and rho-induction, split real forms and the dual-orbit columns.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphunit/orbits.hpp"

namespace sphunit {

enum class TabKind { u, sp, so };
std::string to_string(TabKind k);
TabKind tabkind_from_string(const std::string& s);

struct Row {
  int len = 0;
  int lead = +1;  // +1 or -1
  int last() const { return len % 2 ? lead : -lead; }
  friend bool operator==(const Row&, const Row&) = default;
};

struct SignedTableau {
  TabKind kind = TabKind::u;
  std::vector<Row> rows;         // canonical: length desc, + before -
  std::optional<DLabel> label;   // so with all rows even only

  void canonicalize();
  int size() const;
  std::vector<int> partition() const;  // increasing, like OrbitPartition
  std::string str() const;             // "+-+/+-/-+/+/-"
  friend bool operator==(const SignedTableau&, const SignedTableau&) = default;
};

std::pair<int, int> signature_of(const SignedTableau& t);
bool is_valid(const SignedTableau& t);

// Parts in any order. Throws DomainError "invalid_partition" when the
// partition is not of the kind's shape (sp: odd parts with even
// multiplicity; so: even parts with even multiplicity).
std::vector<SignedTableau> enumerate_real_forms(TabKind kind, std::vector<int> partition,
                                                std::optional<std::pair<int, int>> signature = std::nullopt);

enum class Side { beginning, end };

// Induction from u(a_plus, a_minus) (times the classical factor carrying t).
SignedTableau theta_induce(TabKind kind, std::pair<int, int> levi_sig, const SignedTableau& t,
                           Side side = Side::beginning);

// Real induction from gl(dim_v1) x g(W).
SignedTableau rho_induce(TabKind kind, int dim_v1, const SignedTableau& t);

// Split real form of a complex orbit of G (B: so odd, C: sp, D: so even).
SignedTableau split_form(GroupType g, std::vector<int> partition);

// Distinguished even sp-orbit (parts 2x_i, distinct) to the partition of
// its dual orbit in so(odd), built from the column list.
std::vector<int> dual_column_list(const std::vector<int>& sp_parts);
OrbitPartition dual_columns(const OrbitPartition& sp_orbit);

// Partition helpers used by the oracles.
std::vector<int> transpose(const std::vector<int>& parts);  // any order in, decreasing out
// Collapse to a C (sp) or B/D (so) partition; decreasing out.
std::vector<int> collapse(TabKind kind, std::vector<int> parts);

}  // namespace sphunit
