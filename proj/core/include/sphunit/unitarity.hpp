// unitarity.hpp
//
// Complementary-series tests on the centralizer of the attached orbit,
// Sahi's position test, and the verdict pipeline.

#pragma once

#include <string>
#include <vector>

#include "sphunit/orbits.hpp"
#include "sphunit/parameter.hpp"

namespace sphunit {

enum class FactorKind { sp, so_odd, so_even };
std::string to_string(FactorKind k);

struct FactorNu {
  FactorKind kind = FactorKind::sp;
  int part = 0;  // orbit part the factor comes from
  int r = 0;     // sp(r) / so(r)
  Vec nus;       // sorted increasing, padded with zeros to the factor rank
};

// Rank of sp(r) or so(r).
int factor_rank(const FactorNu& f);

std::vector<FactorNu> znu_coordinates(const StringDecomposition& dec);

// Trivial-orbit complementary-series test for one factor. The odd-rank
// so_even condition nu_1 = 0 is applied only if parity_constraint is set.
// Writes the first failing condition to *why when given.
bool cs_test(const FactorNu& f, bool parity_constraint = true, std::string* why = nullptr);

enum class SahiType { C_like, D_like };
enum class SahiConvention { from_top, from_bottom };
enum class SahiResult { Unitary, NotUnitary, Ambiguous };
std::string to_string(SahiResult r);

// Default convention; agrees with cs_test (see the calibration test).
inline constexpr SahiConvention kSahiDefault = SahiConvention::from_top;

SahiResult sahi_test(Vec nus, SahiType t, bool odd_rank, SahiConvention c = kSahiDefault);

// Step-2 string of the right length parity: even for B, odd for C, D.
bool is_adapted(const StringRecord& s, GroupType g);

struct Verdict {
  bool hermitian = false;
  OrbitPartition orbit;
  std::vector<FactorNu> factors;
  bool unitary = false;
  std::vector<std::string> reasons;
};

Verdict verdict(const Parameter& p);

}  // namespace sphunit
