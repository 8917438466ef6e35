#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cmfield/hminus.hpp"
#include "cmfield/theorems.hpp"
#include "cmfield/unitindex.hpp"

namespace cmfield {

using Json = nlohmann::ordered_json;

/// {field, conductor, degree, w, Q, rule, h_minus, factors:[{rep, norm_num, norm_den}]}
Json to_json(const MinusReport& r, const std::string& field_spec);
/// {field, conductor, degree, w, Q, kappa, rule, essential_ramification}
Json to_json(const UnitIndexVerdict& v, const AbelianField& k, const std::string& field_spec);
Json to_json(const CheckReport& r);

/// Rows of strings rendered as CSV (RFC 4180 quoting) or as an aligned table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
std::string render_csv(const Table& t);
std::string render_aligned(const Table& t);

inline const std::vector<std::string> kHminusColumns{"field", "conductor", "degree", "w", "Q", "rule", "h_minus"};
inline const std::vector<std::string> kUnitIndexColumns{"field", "conductor", "degree", "w", "Q", "kappa", "rule"};

std::vector<std::string> hminus_row(const MinusReport& r, const std::string& field_spec);
std::vector<std::string> unitindex_row(const UnitIndexVerdict& v, const AbelianField& k, const std::string& field_spec);

}  // namespace cmfield
