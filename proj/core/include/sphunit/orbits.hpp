// orbits.hpp
//
// Nilpotent orbits in the dual algebra, given by partitions:
//   B: partitions of 2n in sp(2n)   (odd parts even multiplicity)
//   C: partitions of 2n+1 in so     (even parts even multiplicity)
//   D: partitions of 2n in so(2n)   (even parts even multiplicity)
// Very even D orbits carry a label I or II.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphunit/rational.hpp"
#include "sphunit/types.hpp"

namespace sphunit {

enum class DLabel { I, II };
std::string to_string(DLabel l);

struct OrbitPartition {
  std::vector<int> parts;  // sorted increasing
  GroupType gtype = GroupType::B;
  std::optional<DLabel> label;

  int size() const;
  int rank() const;  // n with size 2n or 2n+1
  int multiplicity(int a) const;
  bool very_even() const;
  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

std::string to_string(const OrbitPartition& o);

// Sorts the parts; label must be given for very even D orbits.
OrbitPartition make_orbit(GroupType g, std::vector<int> parts, std::optional<DLabel> label = std::nullopt);

bool is_valid_orbit(GroupType g, const std::vector<int>& parts);
bool is_valid_orbit(GroupType g, int rank, const std::vector<int>& parts);

// b lies in the closure of a (dominance of tail sums). Throws on size mismatch.
bool closure_leq(const OrbitPartition& a, const OrbitPartition& b);

enum class FormKind { sp, so };
std::string to_string(FormKind k);

struct CentralizerFactor {
  FormKind kind;
  int r;     // sp(r) or so(r): the multiplicity of the part
  int part;  // the part size it comes from
  friend bool operator==(const CentralizerFactor&, const CentralizerFactor&) = default;
};

std::vector<CentralizerFactor> centralizer(const OrbitPartition& o);
long component_group_order(const OrbitPartition& o);

struct Levi {
  GroupType gtype = GroupType::B;
  std::vector<int> gl_sizes;
  Vec characters;  // one per gl factor
  int residual_rank = 0;
  std::optional<OrbitPartition> residual_orbit;

  int rank() const;
  std::string str() const;  // "gl(2) x gl(3) x g(5)"
};

// Pairs (a, a) in ascending size order; `nu` lists one value per pair.
Levi levi_bc(const OrbitPartition& o);
Levi levi_bc(const OrbitPartition& o, const Vec& nu);
Levi levi_kl(const OrbitPartition& o, const Vec& nu);

// Same, with pairs given explicitly (size, nu) and the distinguished part.
Levi levi_from_pairs(GroupType g, std::vector<std::pair<int, Rational>> pairs,
                     std::vector<int> residual_parts, bool kl_repair);

bool is_distinguished(const OrbitPartition& o);
bool is_even(const OrbitPartition& o);
bool is_smoothly_cuspidal(const OrbitPartition& o);

// Orbits of a given type and rank, in lexicographic order of parts; very
// even D orbits appear twice (I then II).
std::vector<OrbitPartition> all_orbits(GroupType g, int rank);

// Half the neutral element: the multiset of h/2 coordinates (>= 0) of the
// orbit, with rank(o) entries for B/C/D.
Vec half_h(const OrbitPartition& o);

}  // namespace sphunit
