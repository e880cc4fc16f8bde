#include "sphunit_tools/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <functional>

#include "sphunit/errors.hpp"
#include "sphunit_tools/commands.hpp"
#include "sphunit_tools/json_io.hpp"

namespace sphunit::cli {

namespace {

// Sign strings of tableaux ("-+/+-", "++").
bool is_sign_string(const std::string& a) {
  return a.size() > 1 && a.find_first_not_of("+-/. I") == std::string::npos &&
         (a[1] == '+' || a[1] == '-' || a[1] == '/');
}

// "-1/4,3/4" and "-+/+-" would otherwise be read as short flags, and "++"
// is CLI11's subcommand terminator: move such tokens behind "--" so they
// stay positionals.
std::vector<std::string> protect_negative(std::vector<std::string> args) {
  std::vector<std::string> keep, tail;
  bool after_dashes = false;
  for (auto& a : args) {
    if (after_dashes) {
      tail.push_back(std::move(a));
    } else if (a == "--") {
      after_dashes = true;
    } else if ((a.size() > 1 && a[0] == '-' && (std::isdigit(static_cast<unsigned char>(a[1])) || a[1] == '.')) ||
               is_sign_string(a)) {
      tail.push_back(std::move(a));
    } else {
      keep.push_back(std::move(a));
    }
  }
  if (!tail.empty()) {
    keep.push_back("--");
    keep.insert(keep.end(), tail.begin(), tail.end());
  }
  return keep;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical unitary dual of split classical groups"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add = [&](const std::string& name, const std::string& help, auto&& body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "JSON output");
    sub->callback([&action, body]() { action = body; });
    return sub;
  };
  auto param_cmd = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "B, C or D")->required();
    sub->add_option("parameter", o.input, "comma-separated coordinates, e.g. \"1/4,1/3\"")->required();
  };

  param_cmd(add("analyze", "strings, orbit and Levi components", [&] { return cmd_analyze(o, out); }));
  {
    auto* s = add("unitary", "unitarity verdict (exit 0 unitary, 1 not, 2 not hermitian)",
                  [&] { return cmd_unitary(o, out, err); });
    param_cmd(s);
    s->add_option("--sahi-order", o.sahi_order, "from_top (default) or from_bottom");
  }
  {
    auto* s = add("signature", "signatures on the relevant W-types", [&] { return cmd_signature(o, out); });
    param_cmd(s);
    s->add_option("--coroot-convention", o.coroots, "coroots (default) or roots");
  }
  param_cmd(add("multiplicity", "operator ranks against induced multiplicities",
                [&] { return cmd_multiplicity(o, out); }));
  {
    auto* s = add("oracle", "closed-form scalars against the matrix oracle", [&] { return cmd_oracle(o, out); });
    s->add_option("--type", o.type, "B, C or D")->required();
    s->add_option("--max", o.max_total, "largest k+n")->check(CLI::Range(1, 8));
    s->add_option("--max-m", o.max_m, "largest m")->check(CLI::Range(0, 8));
    s->add_option("--grid", o.grid, "nu runs over 1/6 .. grid/6")->check(CLI::Range(1, 60));
  }
  {
    auto* s = add("induce", "induce a signed tableau", [&] { return cmd_induce(o, out); });
    s->add_option("--kind", o.kind, "u, sp or so")->required();
    s->add_option("--rho", o.rho, "gl(d) real induction");
    s->add_option("--theta", o.theta, "u(p,q) induction, p,q");
    s->add_option("--side", o.side, "beginning (default) or end");
    s->add_option("tableau", o.input, "e.g. \"+-/+\"; \".\" for empty")->required();
  }
  {
    auto* s = add("realforms", "signed tableaux of a partition", [&] { return cmd_realforms(o, out); });
    s->add_option("--kind", o.kind, "u, sp or so")->required();
    s->add_option("--partition", o.partition, "parts");
    s->add_option("--signature", o.signature, "p,q");
    s->add_option("parts", o.input, "parts (instead of --partition)");
  }
  {
    auto* s = add("split", "split real form of a complex orbit", [&] { return cmd_split(o, out); });
    s->add_option("--type", o.type, "B, C or D")->required();
    s->add_option("partition", o.input, "parts")->required();
  }
  add("dual", "dual of a distinguished even sp orbit", [&] { return cmd_dual(o, out); })
      ->add_option("partition", o.input, "parts, e.g. 2,4,6")
      ->required();
  {
    auto* s = add("symbol", "symbol, family and orbit of a bipartition", [&] { return cmd_symbol(o, out); });
    s->add_option("--type", o.type, "B, C or D")->required();
    s->add_option("--label", o.label, "I or II for degenerate D");
    s->add_option("bipartition", o.input, "left|right, e.g. \"1|1\"")->required();
  }
  {
    auto* s = add("cells", "families of W-types", [&] { return cmd_cells(o, out); });
    s->add_option("--type", o.type, "B, C or D")->required();
    s->add_option("--rank", o.rank, "rank")->required();
    s->add_flag("--blocks", o.blocks, "coherent-continuation labelings with their blocks");
  }

  try {
    std::vector<std::string> argv = protect_negative(std::move(args));
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const DomainError& e) {
    out << io::error_json(e.code(), e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    out << io::error_json("bad_json", e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace sphunit::cli
