#include "gvz/io.hpp"

#include <iomanip>
#include <ostream>

namespace gvz {

using nlohmann::json;

namespace {

json cyclotomic_json(const Cyclotomic& v) {
  json c = json::object();
  const auto& coeffs = v.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) c[std::to_string(k)] = coeffs[k];
  return {{"e", v.conductor()}, {"c", c}};
}

}  // namespace

json table_json(const CharacterTable& t) {
  const Group& g = *t.group;
  json classes = json::array();
  for (const auto& cls : t.partition.classes)
    classes.push_back({{"rep", cls.rep},
                       {"size", cls.size()},
                       {"elem_order", g.elem_order(cls.rep)},
                       {"inverse_class", cls.inverse_class}});
  json power_map = json::object();
  for (const auto& [p, images] : t.partition.power_map) power_map[std::to_string(p)] = images;
  json chars = json::array();
  for (const auto& row : t.chars) {
    json r = json::array();
    for (const auto& v : row) r.push_back(cyclotomic_json(v));
    chars.push_back(std::move(r));
  }
  return {{"order", g.order()},   {"exponent", g.exponent()}, {"degrees", t.degrees},
          {"classes", classes},   {"power_map", power_map},   {"chars", chars}};
}

json analysis_json(const GroupAnalysis& a) {
  json chars = json::array();
  for (const auto& c : a.chars)
    chars.push_back({{"id", c.id},
                     {"degree", c.degree},
                     {"kernel_order", c.kernel.size()},
                     {"zcenter_order", c.zcenter.size()},
                     {"voff_order", c.voff.size()},
                     {"central_type", c.central_type}});
  return {{"characters", chars},
          {"group",
           {{"gvz", a.gvz},
            {"central_type_group", a.central_type_group},
            {"r_order", a.r_order},
            {"u_order", a.u_order},
            {"u_inf_order", a.u_inf_order},
            {"flat_class_count", a.flat_class_count},
            {"camina_center", a.camina_center}}}};
}

json verdict_json(const VerdictRecord& r) {
  json j{{"statement", statement_id(r.statement)},
         {"group", r.group},
         {"hypothesis_holds", r.hypothesis_holds},
         {"witness", r.witness}};
  j["normal"] = r.normal ? json{{"index", r.normal->index}, {"order", r.normal->order}} : json(nullptr);
  j["conclusion_holds"] = r.conclusion_holds ? json(*r.conclusion_holds) : json("n/a");
  return j;
}

json report_json(const RunReport& r) {
  json out = json::array();
  for (const auto& rec : r.records) out.push_back(verdict_json(rec));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_table_text(std::ostream& os, const CharacterTable& t) {
  const Group& g = *t.group;
  os << g.label() << ": order " << g.order() << ", exponent " << g.exponent() << ", "
     << t.partition.count() << " classes\n";
  os << "class";
  for (std::size_t k = 0; k < t.partition.count(); ++k) os << '\t' << k;
  os << "\nrep";
  for (const auto& c : t.partition.classes) os << '\t' << c.rep;
  os << "\nsize";
  for (const auto& c : t.partition.classes) os << '\t' << c.size();
  os << "\norder";
  for (const auto& c : t.partition.classes) os << '\t' << g.elem_order(c.rep);
  os << '\n';
  for (std::size_t c = 0; c < t.size(); ++c) {
    os << "chi" << c;
    for (const auto& v : t.chars[c]) os << '\t' << v.to_string();
    os << '\n';
  }
  if (g.exponent() > 1) os << "z = exp(2 pi i / " << g.exponent() << ")\n";
}

void write_analysis_text(std::ostream& os, const GroupAnalysis& a) {
  os << "gvz " << std::boolalpha << a.gvz << "\ncentral_type_group " << a.central_type_group
     << "\nr_order " << a.r_order << "\nu_order " << a.u_order << "\nu_inf_order " << a.u_inf_order
     << "\nflat_class_count " << a.flat_class_count << "\ncamina_center " << a.camina_center << '\n';
  os << "chi\tdegree\t|ker|\t|Z(chi)|\t|V(chi)|\tcentral_type\n";
  for (const auto& c : a.chars)
    os << c.id << '\t' << c.degree << '\t' << c.kernel.size() << '\t' << c.zcenter.size() << '\t'
       << c.voff.size() << '\t' << c.central_type << '\n';
}

void write_report_text(std::ostream& os, const RunReport& r) {
  for (const auto& rec : r.records) {
    if (!rec.violation()) continue;
    os << "VIOLATION " << statement_id(rec.statement) << ' ' << rec.group;
    if (rec.normal) os << " N#" << rec.normal->index << " (order " << rec.normal->order << ')';
    os << ": " << rec.witness << '\n';
  }
  for (const auto& [label, msg] : r.load_errors) os << "LOAD ERROR " << label << ": " << msg << '\n';
  os << std::left << std::setw(24) << "statement" << std::right << std::setw(12) << "substantive"
     << std::setw(10) << "vacuous" << std::setw(12) << "violations" << '\n';
  for (const auto& [s, t] : r.tallies)
    os << std::left << std::setw(24) << statement_id(s) << std::right << std::setw(12) << t.substantive
       << std::setw(10) << t.vacuous << std::setw(12) << t.violations << '\n';
  for (auto s : r.below_threshold)
    os << "below substantive threshold: " << statement_id(s) << '\n';
  os << "total records " << r.records.size() << ", violations " << r.violations() << ", load errors "
     << r.load_errors.size() << '\n';
}

}  // namespace gvz
