// commands.hpp
//
// Subcommand bodies of the sphunit tool. Each returns the process exit
// code; DomainError escapes to the dispatcher, which maps it to 65.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sphunit/tableaux.hpp"

namespace sphunit::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;

struct Options {
  std::string type;            // B, C, D
  bool json = false;
  std::string input;           // the positional payload
  std::string sahi_order = "from_top";
  std::string coroots = "coroots";
  std::string kind;            // u, sp, so
  std::optional<int> rho;
  std::string theta;           // "p,q"
  std::string side = "beginning";
  std::string partition;
  std::string signature;       // "p,q"
  std::string label;           // I, II
  int rank = 0;
  int max_total = 5;
  int max_m = 3;
  int grid = 12;
  bool blocks = false;
};

int cmd_analyze(const Options& o, std::ostream& out);
int cmd_unitary(const Options& o, std::ostream& out, std::ostream& err);
int cmd_signature(const Options& o, std::ostream& out);
int cmd_multiplicity(const Options& o, std::ostream& out);
int cmd_oracle(const Options& o, std::ostream& out);

int cmd_induce(const Options& o, std::ostream& out);
int cmd_realforms(const Options& o, std::ostream& out);
int cmd_split(const Options& o, std::ostream& out);
int cmd_dual(const Options& o, std::ostream& out);
int cmd_symbol(const Options& o, std::ostream& out);
int cmd_cells(const Options& o, std::ostream& out);

// "1,2,2" or "(1,2,2)" or "" -> parts. Throws DomainError "bad_partition".
std::vector<int> parse_int_list(const std::string& s);
// "+-+/+-/-+/+/-", optional trailing " I" / " II"; "." is the empty tableau.
SignedTableau parse_tableau(TabKind kind, const std::string& s);

}  // namespace sphunit::cli
