#include "majdist/json.hpp"

#include <sstream>

#include "majdist/errors.hpp"

namespace majdist {

Json to_json(const QPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", std::move(coeffs)}};
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw DomainError("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw DomainError("polynomial coefficients must be decimal strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw DomainError("bad polynomial coefficient: " + c.get<std::string>());
    }
    coeffs.push_back(v);
  }
  return QPoly(std::move(coeffs));
}

Json to_json(const DescentDistribution& d) {
  Json by = Json::object();
  for (const auto& [i, p] : d.by_descents) by[std::to_string(i)] = to_json(p);
  return Json{{"shape", format_shape(d.shape)}, {"by_descents", std::move(by)}, {"total", to_json(d.total)}};
}

namespace {

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = value;
  return out;
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const FormulaResult& r) {
  return Json{{"formula_id", r.formula_id},
              {"status", to_string(r.status)},
              {"params", params_json(r.params)},
              {"value", to_json(r.value)}};
}

Json to_json(const Finding& f) {
  Json out{{"shape", f.shape},
           {"params", params_json(f.params)},
           {"label", f.label},
           {"expected", to_json(f.expected)},
           {"actual", to_json(f.actual)},
           {"equal", f.equal},
           {"property_ok", f.property_ok}};
  out["darga"] = f.stats.darga ? Json(*f.stats.darga) : Json(nullptr);
  out["unimodal"] = f.stats.unimodal;
  out["symmetric"] = f.stats.symmetric;
  return out;
}

Json to_json(const Report& r) {
  Json cases = Json::array();
  for (const auto& f : r.cases) cases.push_back(to_json(f));
  return Json{{"suite_id", r.suite_id},
              {"grid", r.grid},
              {"kind", to_string(r.kind)},
              {"status", to_string(r.status)},
              {"case_count", r.cases.size()},
              {"failures", r.failures()},
              {"cases", std::move(cases)}};
}

std::string report_csv(const Report& r, bool header) {
  std::ostringstream out;
  if (header) out << "suite_id,shape,params,label,equal,property_ok,darga,unimodal,symmetric\n";
  for (const auto& f : r.cases) {
    out << csv_field(r.suite_id) << ',' << csv_field(f.shape) << ',' << csv_field(params_text(f.params))
        << ',' << csv_field(f.label) << ',' << (f.equal ? "true" : "false") << ','
        << (f.property_ok ? "true" : "false") << ',';
    if (f.stats.darga) out << *f.stats.darga;
    out << ',' << (f.stats.unimodal ? "true" : "false") << ',' << (f.stats.symmetric ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace majdist
