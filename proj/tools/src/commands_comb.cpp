// Combinatorial subcommands: induce, realforms, split, dual, symbol, cells.

#include <algorithm>
#include <functional>
#include <sstream>

#include "sphunit/errors.hpp"
#include "sphunit/symbols.hpp"
#include "sphunit/tableaux.hpp"
#include "sphunit_tools/commands.hpp"
#include "sphunit_tools/json_io.hpp"

namespace sphunit::cli {

using io::json;
using io::to_json;

std::vector<int> parse_int_list(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("bad_partition", "expected nonnegative integers, got '" + text + "'");
    out.push_back(std::stoi(tok));
  }
  return out;
}

SignedTableau parse_tableau(TabKind kind, const std::string& text) {
  if (!text.empty() && text.front() == '{') return io::tableau_from_json(json::parse(text));
  std::string body = text;
  SignedTableau t;
  t.kind = kind;
  if (const auto sp = body.find(' '); sp != std::string::npos) {
    const std::string lab = body.substr(sp + 1);
    body = body.substr(0, sp);
    if (lab == "I") t.label = DLabel::I;
    else if (lab == "II") t.label = DLabel::II;
    else throw DomainError("bad_label", "label must be I or II");
  }
  if (body != "." && !body.empty()) {
    std::stringstream ss(body);
    std::string row;
    while (std::getline(ss, row, '/')) {
      if (row.empty()) throw DomainError("bad_tableau", "empty row in '" + text + "'");
      for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] != '+' && row[i] != '-') throw DomainError("bad_tableau", "rows use + and - only");
        if (i > 0 && row[i] == row[i - 1]) throw DomainError("bad_tableau", "signs must alternate in '" + row + "'");
      }
      t.rows.push_back({static_cast<int>(row.size()), row[0] == '+' ? 1 : -1});
    }
  }
  t.canonicalize();
  if (!is_valid(t)) throw DomainError("bad_tableau", "'" + text + "' is not a valid " + to_string(kind) + " tableau");
  return t;
}

namespace {

TabKind read_kind(const Options& o) {
  if (o.kind.empty()) throw DomainError("missing_kind", "--kind is required");
  return tabkind_from_string(o.kind);
}

GroupType read_type(const Options& o) {
  if (o.type.empty()) throw DomainError("missing_type", "--type is required");
  return group_from_string(o.type);
}

std::pair<int, int> read_pair(const std::string& s, const char* what) {
  const auto v = parse_int_list(s);
  if (v.size() != 2) throw DomainError("bad_signature", std::string(what) + " takes p,q");
  return {v[0], v[1]};
}

std::string parts_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

json tableau_json(const SignedTableau& t) {
  json j = to_json(t);
  const auto [p, q] = signature_of(t);
  j["signature"] = {p, q};
  j["str"] = t.str();
  return j;
}

Bipartition read_bipartition(const Options& o) {
  Bipartition b;
  b.wtype = read_type(o);
  const auto bar = o.input.find('|');
  if (bar == std::string::npos) throw DomainError("bad_bipartition", "expected 'left|right'");
  b.left = parse_int_list(o.input.substr(0, bar));
  b.right = parse_int_list(o.input.substr(bar + 1));
  std::sort(b.left.rbegin(), b.left.rend());
  std::sort(b.right.rbegin(), b.right.rend());
  while (!b.left.empty() && b.left.back() == 0) b.left.pop_back();
  while (!b.right.empty() && b.right.back() == 0) b.right.pop_back();
  if (!o.label.empty()) b.dlabel = o.label == "I" ? DLabel::I : o.label == "II" ? DLabel::II
                                      : throw DomainError("bad_label", "label must be I or II");
  if (b.wtype == GroupType::D && b.left == b.right && !b.dlabel)
    throw DomainError("missing_label", "a degenerate type D bipartition needs --label");
  return b;
}

// Partitions of s, decreasing parts.
std::vector<Part> partitions_of(int s) {
  std::vector<Part> out;
  Part cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(s, s);
  return out;
}

std::vector<CoherentData> coherent_tuples(int n) {
  std::vector<CoherentData> out;
  for (int s = 0; 2 * s <= n; ++s)
    for (const auto& tau : partitions_of(s))
      for (int a = 0; 2 * s + a <= n; ++a)
        for (int b = 0; 2 * s + a + b <= n; ++b) out.push_back({tau, a, b, n - 2 * s - a - b});
  return out;
}

std::string tuple_str(const CoherentData& d) {
  return "tau=" + parts_str(d.tau) + " a=" + std::to_string(d.a) + " b=" + std::to_string(d.b) +
         " t=" + std::to_string(d.t);
}

}  // namespace

int cmd_induce(const Options& o, std::ostream& out) {
  const TabKind kind = read_kind(o);
  const SignedTableau t = parse_tableau(kind, o.input);
  if (o.rho.has_value() == !o.theta.empty())
    throw DomainError("bad_induction", "give exactly one of --rho d or --theta p,q");
  SignedTableau r;
  if (o.rho) {
    r = rho_induce(kind, *o.rho, t);
  } else {
    Side side = Side::beginning;
    if (o.side == "end") side = Side::end;
    else if (o.side != "beginning") throw DomainError("bad_side", "--side must be beginning or end");
    r = theta_induce(kind, read_pair(o.theta, "--theta"), t, side);
  }
  if (o.json) {
    out << json{{"input", tableau_json(t)}, {"result", tableau_json(r)}}.dump(2) << "\n";
  } else {
    const auto [p, q] = signature_of(r);
    out << (t.rows.empty() ? "." : t.str()) << "  ->  " << r.str() << "  (" << p << "," << q << ")\n";
  }
  return 0;
}

int cmd_realforms(const Options& o, std::ostream& out) {
  const TabKind kind = read_kind(o);
  std::optional<std::pair<int, int>> sig;
  if (!o.signature.empty()) sig = read_pair(o.signature, "--signature");
  const std::string part_text = o.partition.empty() ? o.input : o.partition;
  const auto forms = enumerate_real_forms(kind, parse_int_list(part_text), sig);
  if (o.json) {
    json a = json::array();
    for (const auto& t : forms) a.push_back(tableau_json(t));
    out << a.dump(2) << "\n";
  } else {
    for (const auto& t : forms) {
      const auto [p, q] = signature_of(t);
      out << t.str() << "  (" << p << "," << q << ")\n";
    }
    out << forms.size() << " tableau" << (forms.size() == 1 ? "" : "x") << "\n";
  }
  return 0;
}

int cmd_split(const Options& o, std::ostream& out) {
  const SignedTableau t = split_form(read_type(o), parse_int_list(o.input));
  if (o.json) {
    out << tableau_json(t).dump(2) << "\n";
  } else {
    const auto [p, q] = signature_of(t);
    out << t.str() << "  (" << p << "," << q << ")\n";
  }
  return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto parts = parse_int_list(o.input);
  const auto cols = dual_column_list(parts);
  const OrbitPartition dual = dual_columns(make_orbit(GroupType::B, parts));
  if (o.json) {
    out << json{{"sp_orbit", parts}, {"columns", cols}, {"dual", to_json(dual)}}.dump(2) << "\n";
  } else {
    out << "columns  " << parts_str(cols) << "\n";
    out << "dual     " << to_string(dual) << "\n";
  }
  return 0;
}

int cmd_symbol(const Options& o, std::ostream& out) {
  const Bipartition b = read_bipartition(o);
  const Symbol s = symbol_of(b);
  const bool special = is_special(s);
  const auto fams = families(b.wtype, b.rank());
  const Family* fam = nullptr;
  for (const auto& f : fams)
    if (std::find(f.members.begin(), f.members.end(), b) != f.members.end() || same_family(f.special, b)) {
      fam = &f;
      break;
    }
  if (!fam) throw DomainError("no_family", "bipartition " + b.str() + " is in no family");
  if (o.json) {
    json members = json::array();
    for (const auto& m : fam->members) members.push_back(to_json(m));
    out << json{{"bipartition", to_json(b)}, {"symbol", to_json(s)},        {"special", special},
                {"family", members},         {"special_member", to_json(fam->special)},
                {"orbit", to_json(fam->orbit)}}
               .dump(2)
        << "\n";
  } else {
    out << "bipartition  " << b.str() << "\n";
    out << "symbol       " << s.str() << (special ? "  special" : "") << "\n";
    out << "family       ";
    for (size_t i = 0; i < fam->members.size(); ++i) out << (i ? " " : "") << fam->members[i].str();
    out << "\n";
    out << "orbit        " << to_string(fam->orbit) << "\n";
  }
  return 0;
}

int cmd_cells(const Options& o, std::ostream& out) {
  const GroupType g = read_type(o);
  if (o.rank < 1) throw DomainError("bad_rank", "--rank must be positive");
  const auto fams = families(g, o.rank);
  const bool blocks = o.blocks && g != GroupType::D;
  json jf = json::array();
  for (const auto& f : fams) {
    json members = json::array();
    for (const auto& m : f.members) {
      json jm = to_json(m);
      if (blocks) {
        json labs = json::array();
        for (const auto& d : coherent_tuples(o.rank))
          for (const auto& l : labelings(m, d))
            labs.push_back({{"tau", d.tau}, {"a", d.a}, {"b", d.b}, {"t", d.t},
                            {"labeling", l.str()}, {"p", block_of_labeling(g, o.rank, l)}});
        jm["labelings"] = labs;
      }
      members.push_back(jm);
    }
    jf.push_back({{"special", to_json(f.special)}, {"orbit", to_json(f.orbit)}, {"members", members}});
  }
  if (o.json) {
    out << json{{"type", std::string(1, to_char(g))}, {"rank", o.rank}, {"families", jf}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& f : fams) {
    out << to_string(f.orbit) << "  special " << f.special.str() << "\n";
    for (const auto& m : f.members) {
      out << "  " << m.str() << "\n";
      if (!blocks) continue;
      for (const auto& d : coherent_tuples(o.rank))
        for (const auto& l : labelings(m, d))
          out << "    " << tuple_str(d) << "  " << l.str() << "  p=" << block_of_labeling(g, o.rank, l) << "\n";
    }
  }
  if (o.blocks && g == GroupType::D) out << "(block labels are not available for type D)\n";
  return 0;
}

}  // namespace sphunit::cli
