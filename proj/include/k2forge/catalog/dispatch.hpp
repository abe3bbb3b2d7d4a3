#pragma once

#include <string>
#include <utility>
#include <vector>

#include "k2forge/families/record.hpp"

namespace k2forge {

using ParamSet = std::vector<std::pair<std::string, std::vector<Rat>>>;

struct FamilySpec {
  std::string id;
  /// Parameter names in canonical order; vector-valued ones are listed in
  /// `lists`.
  std::vector<std::string> params;
  std::vector<std::string> lists;
  /// Parameters that may be omitted (read as empty lists).
  std::vector<std::string> optional;
};

const std::vector<FamilySpec>& families();
/// Throws UsageError for an unknown id.
const FamilySpec& family(const std::string& id);

/// Parameters reordered canonically; throws UsageError when one is missing,
/// unknown, or a scalar has several values.
ParamSet canonical_params(const FamilySpec& f, const ParamSet& given);

/// Runs the generator of the family.
CurveRecord generate(const std::string& family_id, const ParamSet& params);

/// "family|name=v1,v2|..." over canonical parameters.
std::string canonical_text(const std::string& family_id, const ParamSet& params);
/// SHA-256 hex digest of canonical_text.
std::string input_hash(const std::string& family_id, const ParamSet& params);

/// Comma separated rationals.
std::vector<Rat> parse_rat_list(const std::string& text);
/// A list "v1,v2,..." or a range "lo..hi" or "lo..hi:step" (inclusive).
std::vector<Rat> parse_range(const std::string& text);
/// Tuples separated by ';', each a comma separated list.
std::vector<std::vector<Rat>> parse_grid(const std::string& text);

/// Cartesian product: scalar parameters take each value of their range,
/// list parameters each tuple of their grid.
std::vector<ParamSet> expand(const std::vector<std::pair<std::string, std::vector<std::vector<Rat>>>>& choices);

}  // namespace k2forge
