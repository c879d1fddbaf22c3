#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "gvz/chartheory.hpp"
#include "gvz/verify.hpp"

namespace gvz {

/// {order, exponent, degrees, classes: [{rep, size, elem_order, inverse_class}],
///  power_map: {p: [class ids]}, chars: [[{e, c: {k: coeff}}]]}
nlohmann::json table_json(const CharacterTable& t);

/// {characters: [{id, degree, kernel_order, zcenter_order, voff_order,
///  central_type}], group: {gvz, central_type_group, r_order, u_order,
///  u_inf_order, flat_class_count, camina_center}}
nlohmann::json analysis_json(const GroupAnalysis& a);

/// {statement, group, normal: {index, order} | null, hypothesis_holds,
///  conclusion_holds: bool | "n/a", witness}
nlohmann::json verdict_json(const VerdictRecord& r);
/// JSON array of every record in report order.
nlohmann::json report_json(const RunReport& r);

/// Two-space indented dump with a trailing newline; keys are sorted.
std::string dump(const nlohmann::json& j);

void write_table_text(std::ostream& os, const CharacterTable& t);
void write_analysis_text(std::ostream& os, const GroupAnalysis& a);
void write_report_text(std::ostream& os, const RunReport& r);

}  // namespace gvz
