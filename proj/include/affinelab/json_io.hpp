#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "affinelab/affine.hpp"
#include "affinelab/group.hpp"
#include "affinelab/products.hpp"
#include "affinelab/semibrace.hpp"
#include "affinelab/ybe.hpp"

namespace aflab {

// One canonical JSON schema per structure kind, versioned via a "schema"
// field. Loaders recompute and re-validate everything; emit → load → verify
// round-trips to identical flags.

nlohmann::json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const nlohmann::json& j);  // throws invalid_argument

nlohmann::json affine_to_json(const AffineStructure& A);
/// "group" may be an embedded group object or a constructor spec string.
AffineStructure affine_from_json(const nlohmann::json& j);

nlohmann::json semibrace_to_json(const SemiBrace& S);
SemiBrace semibrace_from_json(const nlohmann::json& j);

nlohmann::json matched_to_json(const MatchedSystem& M);
MatchedSystem matched_from_json(const nlohmann::json& j);

nlohmann::json zappa_to_json(const ZappaSystem& Z);
ZappaSystem zappa_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const SetSolution& r);

nlohmann::json load_json_file(const std::string& path);   // throws invalid_argument
void save_json_file(const std::string& path, const nlohmann::json& j);

/// Constructor specs: "cyclic:6", "dihedral:4", "symmetric:3", "quaternion",
/// "trivial", and '*'-joined direct products such as "cyclic:2*symmetric:3".
FiniteGroup parse_group_spec(const std::string& spec);

/// Accepts either a constructor spec or a path to a group JSON file.
FiniteGroup load_group_arg(const std::string& arg);

}  // namespace aflab
