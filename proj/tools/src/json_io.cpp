#include "sphunit_tools/json_io.hpp"

#include "sphunit/errors.hpp"
#include "sphunit/wtypes.hpp"

namespace sphunit::io {

namespace {

json label_json(const std::optional<DLabel>& l) { return l ? json(to_string(*l)) : json(nullptr); }

std::optional<DLabel> label_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  const auto s = j.get<std::string>();
  if (s == "I") return DLabel::I;
  if (s == "II") return DLabel::II;
  throw DomainError("bad_label", "label must be I or II");
}

json rows_json(const std::vector<std::string>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(r);
  return a;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

json to_json(const Parameter& p) {
  return {{"type", std::string(1, to_char(p.gtype))}, {"coords", to_json(p.coords)}};
}

json to_json(const OrbitPartition& o) {
  return {{"type", std::string(1, to_char(o.gtype))}, {"parts", o.parts}, {"label", label_json(o.label)}};
}

json to_json(const StringRecord& s) {
  return {{"start", s.start.str()},
          {"end", s.end.str()},
          {"length", s.glsize},
          {"nu", s.nu.str()},
          {"tau", s.tau.str()},
          {"origin", s.origin == Origin::Step1 ? "step1" : "step2"}};
}

json to_json(const StringDecomposition& d) {
  json strings = json::array();
  for (const auto& s : d.strings) strings.push_back(to_json(s));
  return {{"type", std::string(1, to_char(d.gtype))},
          {"strings", strings},
          {"residual", to_json(d.residual)},
          {"orbit", to_json(d.orbit)},
          {"nu", to_json(d.nu_vector)},
          {"hermitian", d.hermitian},
          {"twisted", d.twisted}};
}

json to_json(const Levi& l) {
  json gl = json::array();
  for (size_t i = 0; i < l.gl_sizes.size(); ++i)
    gl.push_back({{"size", l.gl_sizes[i]}, {"character", l.characters[i].str()}});
  return {{"type", std::string(1, to_char(l.gtype))},
          {"gl", gl},
          {"residual_rank", l.residual_rank},
          {"residual_orbit", l.residual_orbit ? to_json(*l.residual_orbit) : json(nullptr)},
          {"str", l.str()}};
}

json to_json(const InducedData& d) {
  json j = to_json(d.levi);
  json strings = json::array();
  for (const auto& s : d.char_strings) strings.push_back(to_json(s));
  j["strings"] = strings;
  j["flavor"] = to_string(d.flavor);
  return j;
}

json to_json(const FactorNu& f) {
  std::string why;
  const bool ok = cs_test(f, true, &why);
  json j = {{"kind", to_string(f.kind)}, {"part", f.part}, {"r", f.r}, {"nus", to_json(f.nus)}, {"passes", ok}};
  if (!ok) j["reason"] = why;
  return j;
}

json to_json(const Verdict& v) {
  json factors = json::array();
  for (const auto& f : v.factors) factors.push_back(to_json(f));
  return {{"hermitian", v.hermitian},
          {"orbit", to_json(v.orbit)},
          {"factors", factors},
          {"unitary", v.unitary},
          {"reasons", v.reasons}};
}

json to_json(const SignatureReport& r, GroupType g) {
  return {{"wtype", to_string(r.tag)}, {"n", r.n},         {"m", r.m},
          {"ktype", ktype_label(g, r.tag, r.n, r.m)},      {"dim", r.matrix_dim},
          {"plus", r.plus},          {"minus", r.minus}, {"zero", r.zero}};
}

json to_json(const SignedTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(json::array({r.len, r.lead > 0 ? "+" : "-"}));
  return {{"kind", to_string(t.kind)}, {"rows", rows}, {"label", label_json(t.label)}};
}

json to_json(const Bipartition& b) {
  return {{"type", std::string(1, to_char(b.wtype))},
          {"left", b.left},
          {"right", b.right},
          {"label", label_json(b.dlabel)}};
}

json to_json(const Symbol& s) {
  return {{"type", std::string(1, to_char(s.wtype))}, {"top", s.top}, {"bottom", s.bottom}};
}

json to_json(const Labeling& l) {
  return {{"left", rows_json(l.left)}, {"right", rows_json(l.right)}, {"str", l.str()}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

Parameter parameter_from_json(const json& j) {
  Parameter p;
  p.gtype = group_from_string(j.at("type").get<std::string>());
  for (const auto& x : j.at("coords")) p.coords.push_back(rational_from_json(x));
  return p;
}

OrbitPartition orbit_from_json(const json& j) {
  return make_orbit(group_from_string(j.at("type").get<std::string>()), j.at("parts").get<std::vector<int>>(),
                    label_from(j.value("label", json(nullptr))));
}

SignedTableau tableau_from_json(const json& j) {
  SignedTableau t;
  t.kind = tabkind_from_string(j.at("kind").get<std::string>());
  for (const auto& r : j.at("rows")) t.rows.push_back({r.at(0).get<int>(), r.at(1).get<std::string>() == "+" ? 1 : -1});
  t.label = label_from(j.value("label", json(nullptr)));
  t.canonicalize();
  return t;
}

}  // namespace sphunit::io
