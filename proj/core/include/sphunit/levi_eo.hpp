// levi_eo.hpp
//
// The auxiliary Levi components m_e, m_o and the relevant W-type
// multiplicities of the modules induced from them.

#pragma once

#include <vector>

#include "sphunit/orbits.hpp"
#include "sphunit/parameter.hpp"

namespace sphunit {

enum class Flavor { Even, Odd };
std::string to_string(Flavor f);

struct InducedData {
  Levi levi;
  std::vector<StringRecord> char_strings;  // one per gl factor, same order
  Flavor flavor = Flavor::Even;
};

InducedData levi_e(const StringDecomposition& dec);
InducedData levi_o(const StringDecomposition& dec);

// Inducing data for m_BC and m_KL with the Step-2 characters.
InducedData induced_bc(const StringDecomposition& dec);
InducedData induced_kl(const StringDecomposition& dec);

// Multiplicity of sigma_e(m) (resp. sigma_o(m)) in the module induced from
// the trivial W(M)-type. Throws DomainError "negative_m" for m < 0.
int mult_sigma_e(int m, const Levi& levi);
int mult_sigma_o(int m, const Levi& levi);

int mult_in_L(Flavor f, int m, const Parameter& p);

// Relevant multiplicities of the induced module agree with those of L(chi).
bool r_irreducible(const InducedData& data, const Parameter& p);

}  // namespace sphunit
