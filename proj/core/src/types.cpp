// types.cpp

#include "sphunit/types.hpp"

#include "sphunit/errors.hpp"

namespace sphunit {

char to_char(GroupType g) {
  switch (g) {
    case GroupType::A: return 'A';
    case GroupType::B: return 'B';
    case GroupType::C: return 'C';
    case GroupType::D: return 'D';
  }
  return '?';
}

char to_char(HeckeType h) {
  switch (h) {
    case HeckeType::B: return 'B';
    case HeckeType::C: return 'C';
    case HeckeType::D: return 'D';
  }
  return '?';
}

GroupType group_from_string(const std::string& s) {
  if (s == "A" || s == "a") return GroupType::A;
  if (s == "B" || s == "b") return GroupType::B;
  if (s == "C" || s == "c") return GroupType::C;
  if (s == "D" || s == "d") return GroupType::D;
  throw DomainError("bad_type", "unknown group type '" + s + "'");
}

HeckeType hecke_of(GroupType g) {
  switch (g) {
    case GroupType::B: return HeckeType::C;
    case GroupType::C: return HeckeType::B;
    case GroupType::D: return HeckeType::D;
    case GroupType::A: break;
  }
  throw DomainError("bad_type", "type A has no B/C/D Hecke type");
}

GroupType group_of(HeckeType h) {
  switch (h) {
    case HeckeType::B: return GroupType::C;
    case HeckeType::C: return GroupType::B;
    case HeckeType::D: return GroupType::D;
  }
  return GroupType::D;
}

Rational hecke_epsilon(HeckeType h) {
  switch (h) {
    case HeckeType::B: return 0;
    case HeckeType::C: return half();
    case HeckeType::D: return 1;
  }
  return 0;
}

}  // namespace sphunit
