// Group and short-exact-sequence spec files.
//
// A group spec is a JSON object with a "kind":
//   {"kind": "cyclic", "n": 4}                 optional "symbol": "c"
//   {"kind": "symmetric", "n": 3}
//   {"kind": "dihedral", "order": 8}
//   {"kind": "direct", "factors": [spec, spec, ...]}
//   {"kind": "table", "table": [[...], ...], "labels": [...]}
//   {"kind": "semidirect", "K": spec, "L": spec,
//    "action": "trivial" | "inversion" | [[l*k for k] for l]}
//   {"kind": "trivial"}
//
// A sequence spec takes one of three shapes:
//   {"G": spec, "K_elements": [ids]}          K normal in G, L = G/K
//   {"K": spec, "G": spec, "L": spec, "iota": [ids], "pi": [ids]}
//   {"semidirect": {"K": spec, "L": spec, "action": ...}}
// with optional "name", "simplicial": "constant" (default) | "coskeleton",
// and "section": either one table L -> G applied on every level (lifted
// coordinatewise for coskeleta) or {"0": table, "1": table, ...} with one
// table per level. Without a section the semidirect shape uses l -> (1, l)
// and the others the minimal-representative coset section.

#pragma once

#include <filesystem>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

#include "simpfib/fibration.hpp"
#include "simpfib/group.hpp"
#include "simpfib/ses.hpp"

namespace simpfib {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(std::filesystem::path const& path);

GroupPtr parse_group(nlohmann::json const& spec);

/// "cyclic:4", "symmetric:3", "dihedral:8", "trivial", and products such as
/// "cyclic:2*cyclic:2".
GroupPtr parse_group_shorthand(std::string_view text);

/// A shorthand, or the path of a group spec file.
GroupPtr load_group(std::string const& argument);

struct SesSpec {
  std::string name;
  SesPtr ses;
  PseudoSection section;
};

/// Builds the sequence up to level `cutoff`. Throws SpecError on malformed
/// input, including tables that do not describe an exact sequence of
/// groups.
SesSpec parse_ses(nlohmann::json const& spec, int cutoff);
SesSpec load_ses(std::filesystem::path const& path, int cutoff);

}  // namespace simpfib
