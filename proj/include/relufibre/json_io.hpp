#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "relufibre/canon.hpp"
#include "relufibre/equiv.hpp"
#include "relufibre/fibre.hpp"
#include "relufibre/group.hpp"
#include "relufibre/param.hpp"
#include "relufibre/realize.hpp"

namespace relufibre {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("-3", "1/2"); JSON integers are accepted on
// input. Indices are one-based on the wire.

Rat rat_from_json(const Json& j, const std::string& path);
Json to_json(const Rat& r);
Json to_json(std::span<const Rat> v);

/// Schema: {"m", "n", "k", "M": k x n, "A": n x m, "b": n, "c": k}. Errors
/// carry the JSON path of the offending node.
Parameter parameter_from_json(const Json& j);
Parameter parse_parameter(std::string_view text);
Json to_json(const Parameter& theta);
/// Compact normalized text.
std::string serialize(const Parameter& theta);

GroupElement group_element_from_json(const Json& j);
Json to_json(const GroupElement& g);

Json to_json(const StabilizerDescription& s);
Json to_json(const MinimalForm& mf);
Json to_json(const Reduction& r);
Json to_json(const EquivalenceCertificate& cert);
Json to_json(const EquivalenceResult& result);
Json to_json(const Violation& v);
Json to_json(const FibreVerdict& v);
Json to_json(const SampleComparison& s);

}  // namespace relufibre
