// symbols.hpp
//
// Symbols of irreducible Weyl group representations of types B, C, D,
// special symbols, families and attached orbits, and the labeling count
// for the coherent continuation representation of so(p,q) blocks.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphunit/orbits.hpp"
#include "sphunit/types.hpp"

namespace sphunit {

// Partitions here are stored decreasing, without zeros.
using Part = std::vector<int>;

struct Bipartition {
  Part left, right;
  GroupType wtype = GroupType::B;
  std::optional<DLabel> dlabel;  // D with left == right

  int rank() const;
  std::string str() const;  // "[(2,1),(1)]"
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct Symbol {
  std::vector<int> top, bottom;
  GroupType wtype = GroupType::B;

  std::vector<int> entries() const;  // sorted multiset
  std::string str() const;           // "(0 2 4 | 1 3)"
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// m = 0 picks the smallest padding that fits. B, C: top has m+1 entries,
// bottom m. D: both m.
Symbol symbol_of(const Bipartition& b, int m = 0);

// D symbols are oriented so that the interleaving test is tried both ways.
bool is_special(const Symbol& s);
bool is_special(const Bipartition& b);
// Same double cell: symbols with a common padding have equal entries.
// Throws DomainError "rank_mismatch".
bool same_family(const Bipartition& a, const Bipartition& b);

// Orbit of G attached to a special symbol: B gives an orbit in so(2n+1)
// (tag C), C one in sp(2n) (tag B), D one in so(2n) (tag D, label-free).
// Throws DomainError "not_special".
OrbitPartition orbit_of_special_symbol(const Symbol& s);

// All irreducible W-types of the given type and rank, D with I/II copies for
// left == right and each unordered pair once (larger side left).
std::vector<Bipartition> all_bipartitions(GroupType wtype, int n);

struct Family {
  std::vector<Bipartition> members;
  Bipartition special;
  OrbitPartition orbit;
};
std::vector<Family> families(GroupType wtype, int n);

// Coherent continuation bookkeeping. Labels: '*' core, 'r', 'R' (r'),
// 'c' for type B; for type C the sign twist swaps the roles, written
// 'c', 'C' (c'), 'r'.
struct Labeling {
  std::vector<std::string> left, right;  // one string per row
  std::string str() const;               // "(c,r')", "(0,rr')", "(*,*)"
  int count(char x) const;
};

struct CoherentData {
  Part tau;
  int a = 0, b = 0, t = 0;
};

// Throws DomainError "size_mismatch" unless 2|tau| + a + b + t = rank, and
// "unsupported_type" for D.
std::vector<Labeling> labelings(const Bipartition& sigma, const CoherentData& d);
int coherent_multiplicity(const Bipartition& sigma, const CoherentData& d);

// p of the SO(p,q) block (B: p + q = 2n+1, D: p + q = 2n).
int block_of_labeling(GroupType wtype, int n, const Labeling& l);

}  // namespace sphunit
