#include "cmfield/report.hpp"

#include <algorithm>
#include <sstream>

namespace cmfield {

Json to_json(const MinusReport& r, const std::string& field_spec) {
  Json factors = Json::array();
  for (const auto& f : r.orbit_factors)
    factors.push_back({{"rep", encode(f.rep)},
                       {"norm_num", f.norm.get_num().get_str()},
                       {"norm_den", f.norm.get_den().get_str()}});
  return {{"field", field_spec},
          {"conductor", r.field.conductor()},
          {"degree", r.field.degree()},
          {"w", r.w},
          {"Q", r.Q},
          {"rule", rule_tag(r.verdict.rule)},
          {"h_minus", r.h_minus.get_str()},
          {"factors", factors}};
}

Json to_json(const UnitIndexVerdict& v, const AbelianField& k, const std::string& field_spec) {
  Json j{{"field", field_spec},
         {"conductor", k.conductor()},
         {"degree", k.degree()},
         {"w", roots_of_unity_order(k)},
         {"Q", v.Q}};
  j["kappa"] = v.kappa_order ? Json(*v.kappa_order) : Json(nullptr);
  j["rule"] = rule_tag(v.rule);
  j["essential_ramification"] = v.essential_ramification ? Json(*v.essential_ramification) : Json(nullptr);
  return j;
}

Json to_json(const CheckReport& r) {
  Json q = Json::object();
  for (const auto& [k, v] : r.quantities) q[k] = v;
  return {{"name", r.name}, {"inputs", r.inputs}, {"verdict", to_string(r.verdict)},
          {"statement", r.statement}, {"quantities", q}};
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render_aligned(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size() && i < width.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::vector<std::string> hminus_row(const MinusReport& r, const std::string& field_spec) {
  return {field_spec, std::to_string(r.field.conductor()), std::to_string(r.field.degree()), std::to_string(r.w),
          std::to_string(r.Q), rule_tag(r.verdict.rule), r.h_minus.get_str()};
}

std::vector<std::string> unitindex_row(const UnitIndexVerdict& v, const AbelianField& k, const std::string& field_spec) {
  return {field_spec, std::to_string(k.conductor()), std::to_string(k.degree()),
          std::to_string(roots_of_unity_order(k)), std::to_string(v.Q),
          v.kappa_order ? std::to_string(*v.kappa_order) : "unknown", rule_tag(v.rule)};
}

}  // namespace cmfield
