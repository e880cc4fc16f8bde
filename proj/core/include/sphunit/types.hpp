// types.hpp
#pragma once

#include <string>

#include "sphunit/rational.hpp"

namespace sphunit {

// B = split SO(2n+1), C = split Sp(2n), D = split SO(2n), A = GL(n).
enum class GroupType { A, B, C, D };

// Type of the affine Hecke algebra (the dual root datum). Group B and C
// swap; D stays D.
enum class HeckeType { B, C, D };

char to_char(GroupType g);
char to_char(HeckeType h);
GroupType group_from_string(const std::string& s);  // throws DomainError
HeckeType hecke_of(GroupType g);
GroupType group_of(HeckeType h);

// Offset of the trivial string (-n+eps, ..., -1+eps) of G(n).
Rational hecke_epsilon(HeckeType h);

}  // namespace sphunit
