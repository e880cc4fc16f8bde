// parameter.hpp
//
// Spherical parameters, string extraction and the nested predicates.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphunit/matrix.hpp"
#include "sphunit/orbits.hpp"
#include "sphunit/types.hpp"

namespace sphunit {

struct Parameter {
  GroupType gtype = GroupType::B;
  Vec coords;

  int rank() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const Parameter&, const Parameter&) = default;
};

std::string to_string(const Parameter& p);

// "0,1,1,2" or "1/2, -3/2". Throws DomainError on malformed input.
Parameter parse_parameter(const std::string& text, GroupType g);

// Dominant form for output: A sorted decreasing; B, C absolute values
// increasing; D as B/C except the first coordinate may be negative.
Parameter dominant_form(const Parameter& p);

// Same Weyl orbit, ordered for the operator calculus: decreasing,
// nonnegative (D: last coordinate may be negative).
Vec chamber_dominant(GroupType g, const Vec& x);

bool is_hermitian(const Parameter& p);

enum class Origin { Step1, Step2 };

struct StringRecord {
  Rational start, end;
  Rational nu;   // average (Step2); 0 for Step1
  Rational tau;  // offset in [0,1/2] (Step2); 0 for Step1
  Origin origin = Origin::Step2;
  int glsize = 1;  // number of entries

  std::vector<Rational> entries() const;
  friend bool operator==(const StringRecord&, const StringRecord&) = default;
};

struct StringDecomposition {
  GroupType gtype = GroupType::B;
  std::vector<StringRecord> strings;  // Step1 records first, then Step2
  Vec residual;                       // Step-1 coordinates (after Step 0 padding)
  OrbitPartition orbit;
  Vec nu_vector;                      // Step-2 averages, in record order
  bool hermitian = true;
  bool twisted = false;               // D: Step-2 flips used an odd number of sign changes

  std::vector<StringRecord> step1() const;
  std::vector<StringRecord> step2() const;
};

StringDecomposition extract_strings(const Parameter& p);

// Strings as (start, end) pairs with end - start integral and >= 0.
using Segment = std::pair<Rational, Rational>;
bool is_nested(const std::vector<Segment>& strings);
bool is_strongly_nested(const std::vector<Segment>& strings);

// Canonical presentation of one Step-2 string (type B: f in Z+1/2,
// types C, D: f in Z). Returns the record with nu and tau filled in.
StringRecord canonical_string(GroupType g, const Rational& start, int len);

// Rebuild a parameter (up to W) from orbit data: h/2 from Step-1 parts and
// the Step-2 strings. Used as an oracle.
Vec reconstruct(const StringDecomposition& dec);

}  // namespace sphunit
