#include <doctest.h>

#include <sstream>

#include "sphunit_tools/cli.hpp"
#include "sphunit_tools/commands.hpp"
#include "sphunit_tools/json_io.hpp"
#include "support.hpp"

using namespace sphunit;
using namespace sphunit::test;
using sphunit::io::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("unitary") {
  const auto r = run({"unitary", "--type", "B", "1/4,1/3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.j()["unitary"] == true);
  CHECK(r.j()["sahi_order"] == "from_top");
  CHECK(run({"unitary", "--type", "B", "1/4,3/4"}).code == 1);
  CHECK(run({"unitary", "--type", "D", "1/4,1/3,1/5"}).code == 2);
  // Negative coordinates are not flags.
  CHECK(run({"unitary", "--type", "B", "-3/8,5/8,1/4,5/4"}).code == 0);

  const auto bottom = run({"unitary", "--type", "B", "0,1/4,3/4", "--sahi-order", "from_bottom"});
  CHECK(bottom.err.find("warning") != std::string::npos);
}

TEST_CASE("analyze on the worked type-B parameter") {
  const auto r = run({"analyze", "--type", "B", "-1/4,3/4,-2/3,1/3,4/3,-3/2,-1/2,1/2,3/2,1/2", "--json"});
  REQUIRE(r.code == 0);
  const json j = r.j();
  CHECK(j["orbit"]["parts"] == json({2, 2, 2, 3, 3, 4, 4}));
  CHECK(j["m_BC"]["str"] == "gl(2) x gl(3) x gl(4) x g(1)");
  CHECK(j["m_KL"]["str"] == "gl(2) x gl(3) x g(5)");
  CHECK(j["m_KL"]["residual_orbit"]["parts"] == json({2, 4, 4}));
  const auto text = run({"analyze", "--type", "B", "-1/4,3/4,-2/3,1/3,4/3,-3/2,-1/2,1/2,3/2,1/2"});
  CHECK(text.out.find("m_KL       gl(2) x gl(3) x g(5)") != std::string::npos);
}

TEST_CASE("signature and multiplicity") {
  const auto s = run({"signature", "--type", "B", "1/4,1/3", "--json"});
  REQUIRE(s.code == 0);
  for (const auto& rep : s.j()) {
    CHECK(rep["minus"] == 0);
    CHECK(rep["plus"].get<int>() + rep["minus"].get<int>() + rep["zero"].get<int>() == rep["dim"].get<int>());
  }
  CHECK(run({"signature", "--type", "B", "1/4,1/3", "--coroot-convention", "roots"}).code == 0);
  CHECK(run({"signature", "--type", "B", "1/4,1/3", "--coroot-convention", "weights"}).code == 65);
  const auto m = run({"multiplicity", "--type", "C", "0,1,1,2", "--json"});
  CHECK(m.code == 0);
  CHECK(m.j()["agree"] == true);
}

TEST_CASE("oracle") {
  const auto r = run({"oracle", "--type", "C", "--max", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("all pass") != std::string::npos);
  const auto j = run({"oracle", "--type", "D", "--max", "4", "--json"}).j();
  CHECK(j["fail"] == 0);
  CHECK(j["cases"].get<int>() == j["pass"].get<int>());
}

TEST_CASE("tableau subcommands") {
  const auto rf = run({"realforms", "--kind", "so", "1,1,2,2,3", "--signature", "5,4", "--json"});
  REQUIRE(rf.code == 0);
  CHECK(rf.j().size() == 2);
  const auto ind = run({"induce", "--kind", "sp", "--theta", "1,1", "--side", "end", "+-/-+"});
  CHECK(ind.code == 0);
  CHECK(ind.out.find("+-+-/-+-+") != std::string::npos);
  CHECK(run({"induce", "--kind", "sp", "+-/-+"}).code == 65);  // needs --rho or --theta
  CHECK(run({"induce", "--kind", "sp", "--rho", "1", "++"}).code == 65);
  // Leading minus and the "++" token stay positionals.
  CHECK(run({"induce", "--kind", "sp", "--rho", "1", "-+/+-"}).code == 0);
  const auto sp = run({"split", "--type", "B", "1,1,3", "--json"});
  CHECK(sp.j()["str"] == "+-+/+/-");
  const auto d = run({"dual", "2,4,6", "--json"});
  CHECK(d.j()["columns"] == json({7, 3, 3}));
}

TEST_CASE("symbol subcommands") {
  const auto s = run({"symbol", "--type", "B", "1|1", "--json"});
  REQUIRE(s.code == 0);
  CHECK(s.j()["special"] == true);
  CHECK(s.j()["orbit"]["parts"] == json({1, 1, 3}));
  const auto c = run({"cells", "--type", "B", "--rank", "2", "--blocks"});
  CHECK(c.code == 0);
  CHECK(c.out.find("(c,r')  p=4") != std::string::npos);
  CHECK(c.out.find("(0,r'c)  p=4") != std::string::npos);
}

TEST_CASE("exit codes for bad input") {
  CHECK(run({}).code == 64);
  CHECK(run({"unitary", "--type", "B"}).code == 64);
  CHECK(run({"unitary", "--type", "B", "1/4", "--frobnicate"}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"--help"}).code == 0);
  const auto bad = run({"unitary", "--type", "B", "1/x", "--json"});
  CHECK(bad.code == 65);
  CHECK(bad.j()["error"]["code"] == "bad_token");
  CHECK(run({"unitary", "--type", "E", "1/4"}).code == 65);
  CHECK(run({"signature", "--type", "D", "1/4,1/3,1/5"}).code == 65);
  CHECK(run({"split", "--type", "B", "1,1,1,1"}).code == 65);
  CHECK(run({"dual", "2,2"}).code == 65);
}

TEST_CASE("JSON round trips") {
  const auto u = run({"unitary", "--type", "C", "0,1/2,1", "--json"}).j();
  const Parameter p = io::parameter_from_json(u["parameter"]);
  CHECK(p == P(GroupType::C, "0,1/2,1"));
  CHECK(io::to_json(p) == u["parameter"]);
  const OrbitPartition o = io::orbit_from_json(u["orbit"]);
  CHECK(io::to_json(o) == u["orbit"]);
  const auto t = run({"split", "--type", "B", "1,1,2,2,3", "--json"}).j();
  const SignedTableau tab = io::tableau_from_json(t);
  CHECK(tab.str() == t["str"]);
  json core = t;
  core.erase("signature");
  core.erase("str");
  CHECK(io::to_json(tab) == core);
  CHECK(io::rational_from_json(json("-6/4")) == Q("-3/2"));
  // A tableau given as JSON on the command line.
  const auto ind = run({"induce", "--kind", "u", "--rho", "1", R"({"kind":"u","rows":[[1,"+"],[1,"-"]]})"});
  CHECK(ind.code == 0);
  CHECK(ind.out.find("+-+/-") != std::string::npos);
}

TEST_CASE("output is byte-stable") {
  const std::vector<std::vector<std::string>> cmds{
      {"analyze", "--type", "C", "0,1,1,2", "--json"},
      {"signature", "--type", "B", "1/4,3/4", "--json"},
      {"cells", "--type", "C", "--rank", "3", "--json"},
      {"realforms", "--kind", "sp", "1,1,2,2", "--json"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
