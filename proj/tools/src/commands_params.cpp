// Parameter-side subcommands: analyze, unitary, signature, multiplicity,
// oracle.

#include <map>
#include <tuple>

#include "sphunit/errors.hpp"
#include "sphunit/intertwine.hpp"
#include "sphunit/levi_eo.hpp"
#include "sphunit/unitarity.hpp"
#include "sphunit_tools/commands.hpp"
#include "sphunit_tools/json_io.hpp"

namespace sphunit::cli {

using io::json;
using io::to_json;

namespace {

Parameter read_parameter(const Options& o) {
  if (o.type.empty()) throw DomainError("missing_type", "--type is required");
  return parse_parameter(o.input, group_from_string(o.type));
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string string_str(const StringRecord& s) {
  std::string out = "[" + s.start.str() + ".." + s.end.str() + "]";
  if (s.origin == Origin::Step1) return out + " step1";
  return out + " nu=" + s.nu.str() + " tau=" + s.tau.str();
}

void require_hermitian(const Parameter& p) {
  if (!is_hermitian(p)) throw DomainError("not_hermitian", "parameter " + to_string(p) + " is not hermitian");
}

std::optional<SahiResult> sahi_for(const FactorNu& f, SahiConvention c) {
  if (f.kind == FactorKind::sp) return std::nullopt;
  const bool odd = factor_rank(f) % 2 == 1;
  return sahi_test(f.nus, f.kind == FactorKind::so_odd ? SahiType::C_like : SahiType::D_like, odd, c);
}

}  // namespace

int cmd_analyze(const Options& o, std::ostream& out) {
  const Parameter p = read_parameter(o);
  const StringDecomposition dec = extract_strings(p);
  const Parameter dom = dominant_form(p);
  const InducedData bc = induced_bc(dec), kl = induced_kl(dec);
  const InducedData e = levi_e(dec), od = levi_o(dec);

  if (o.json) {
    json j;
    j["parameter"] = to_json(p);
    j["dominant"] = to_json(dom);
    j["hermitian"] = dec.hermitian;
    j["orbit"] = to_json(dec.orbit);
    j["decomposition"] = to_json(dec);
    j["m_BC"] = to_json(bc);
    j["m_KL"] = to_json(kl);
    j["m_e"] = to_json(e);
    j["m_o"] = to_json(od);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "parameter  " << to_string(p) << "\n";
  out << "dominant   " << to_string(dom) << "\n";
  out << "hermitian  " << (dec.hermitian ? "yes" : "no") << "\n";
  out << "orbit      " << to_string(dec.orbit) << "\n";
  for (const auto& s : dec.strings) out << "string     " << string_str(s) << "\n";
  out << "nu         " << vec_str(dec.nu_vector) << "\n";
  out << "m_BC       " << bc.levi.str() << "\n";
  out << "m_KL       " << kl.levi.str() << "\n";
  out << "m_e        " << e.levi.str() << "\n";
  out << "m_o        " << od.levi.str() << "\n";
  return 0;
}

int cmd_unitary(const Options& o, std::ostream& out, std::ostream& err) {
  SahiConvention conv = kSahiDefault;
  if (o.sahi_order == "from_bottom") {
    conv = SahiConvention::from_bottom;
    err << "warning: --sahi-order from_bottom is the uncalibrated reading of the position count; "
           "it disagrees with the complementary-series test\n";
  } else if (o.sahi_order != "from_top") {
    throw DomainError("bad_sahi_order", "--sahi-order must be from_top or from_bottom");
  }
  const Parameter p = read_parameter(o);
  const Verdict v = verdict(p);
  const int code = !v.hermitian ? 2 : (v.unitary ? 0 : 1);

  if (o.json) {
    json j = to_json(v);
    j["parameter"] = to_json(p);
    j["sahi_order"] = o.sahi_order;
    for (size_t i = 0; i < v.factors.size(); ++i) {
      const auto s = sahi_for(v.factors[i], conv);
      j["factors"][i]["sahi"] = s ? json(to_string(*s)) : json(nullptr);
    }
    out << j.dump(2) << "\n";
    return code;
  }
  out << "parameter  " << to_string(p) << "\n";
  out << "orbit      " << to_string(v.orbit) << "\n";
  out << "hermitian  " << (v.hermitian ? "yes" : "no") << "\n";
  for (const auto& f : v.factors) {
    std::string why;
    const bool ok = cs_test(f, true, &why);
    out << "factor     " << to_string(f.kind) << "(" << f.r << ") part " << f.part << " nu=" << vec_str(f.nus)
        << (ok ? "  ok" : "  fails: " + why);
    if (const auto s = sahi_for(f, conv)) out << "  sahi=" << to_string(*s);
    out << "\n";
  }
  if (v.hermitian) out << "unitary    " << (v.unitary ? "yes" : "no") << "\n";
  return code;
}

int cmd_signature(const Options& o, std::ostream& out) {
  CorootConvention conv = CorootConvention::Coroots;
  if (o.coroots == "roots") conv = CorootConvention::Roots;
  else if (o.coroots != "coroots") throw DomainError("bad_convention", "--coroot-convention must be coroots or roots");
  const Parameter p = read_parameter(o);
  require_hermitian(p);
  const auto reports = all_signatures(p, conv);
  if (o.json) {
    json a = json::array();
    for (const auto& r : reports) a.push_back(to_json(r, p.gtype));
    out << a.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : reports)
    out << to_string(r.tag) << "(" << r.m << ")  " << ktype_label(p.gtype, r.tag, r.n, r.m) << "  dim " << r.matrix_dim
        << "  +" << r.plus << " -" << r.minus << " 0:" << r.zero << "\n";
  return 0;
}

int cmd_multiplicity(const Options& o, std::ostream& out) {
  const Parameter p = read_parameter(o);
  require_hermitian(p);
  json rows = json::array();
  bool all = true;
  for (const auto& model : relevant_models(p.gtype, p.rank())) {
    const int oracle = multiplicity_in_quotient(model, p);
    const Flavor f = model.tag == WTag::SigmaE ? Flavor::Even : Flavor::Odd;
    const int induced = mult_in_L(f, model.m, p);
    all = all && oracle == induced;
    rows.push_back({{"wtype", to_string(model.tag)},
                    {"m", model.m},
                    {"dim", model.dim},
                    {"operator_rank", oracle},
                    {"induced", induced},
                    {"agree", oracle == induced}});
  }
  if (o.json) {
    out << json{{"parameter", to_json(p)}, {"rows", rows}, {"agree", all}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      out << r["wtype"].get<std::string>() << "(" << r["m"] << ")  dim " << r["dim"] << "  rank " << r["operator_rank"]
          << "  induced " << r["induced"] << (r["agree"].get<bool>() ? "" : "  MISMATCH") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.type.empty()) throw DomainError("missing_type", "--type is required");
  const GroupType g = group_from_string(o.type);
  if (g == GroupType::A) throw DomainError("unsupported_type", "oracle sweeps need B, C or D");
  const auto cases = oracle_sweep(g, o.max_total, o.max_m, sixth_grid(o.grid));

  // (tag, k, n, m) -> (points, passes)
  std::map<std::tuple<int, int, int, int>, std::pair<int, int>> table;
  int pass = 0;
  json failures = json::array();
  for (const auto& c : cases) {
    auto& cell = table[{static_cast<int>(c.tag), c.k, c.n, c.m}];
    ++cell.first;
    if (c.pass()) {
      ++cell.second;
      ++pass;
    } else {
      failures.push_back({{"wtype", to_string(c.tag)}, {"k", c.k}, {"n", c.n}, {"m", c.m},
                          {"nu", c.nu.str()}, {"oracle", c.oracle.str()}, {"closed_form", c.closed.str()}});
    }
  }
  const int total = static_cast<int>(cases.size());
  if (o.json) {
    json rows = json::array();
    for (const auto& [key, v] : table)
      rows.push_back({{"wtype", to_string(static_cast<WTag>(std::get<0>(key)))}, {"k", std::get<1>(key)},
                      {"n", std::get<2>(key)}, {"m", std::get<3>(key)}, {"points", v.first}, {"pass", v.second}});
    out << json{{"type", o.type}, {"cases", total}, {"pass", pass}, {"fail", total - pass},
                {"rows", rows}, {"failures", failures}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& [key, v] : table)
      out << to_string(static_cast<WTag>(std::get<0>(key))) << "  k=" << std::get<1>(key) << " n=" << std::get<2>(key)
          << " m=" << std::get<3>(key) << "  " << v.second << "/" << v.first
          << (v.first == v.second ? "  pass" : "  FAIL") << "\n";
    out << "total " << pass << "/" << total << (pass == total ? "  all pass" : "  FAILURES") << "\n";
  }
  return pass == total ? 0 : 1;
}

}  // namespace sphunit::cli
