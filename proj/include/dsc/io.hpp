#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dsc/classify.hpp"
#include "dsc/endoscopy.hpp"
#include "dsc/lfactors.hpp"

namespace dsc::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

// Either a bare array of symbol records or {"symbols": [...], "twists": [...]}.
Alphabet alphabet_from_json(const json &j);
Alphabet alphabet_from_toml(const std::string &text);
// TOML when the path ends in .toml, JSON otherwise.
Alphabet load_alphabet(const std::string &path);
json to_json(const Alphabet &a);

json read_json_file(const std::string &path);

json to_json(const GroupType &g);
GroupType group_from_json(const json &j);

// {"group": ..., "blocks": [{"rho", "a", "mult"}], "epsilon"?: {"chi:5": 1}}
json to_json(const Parameter &phi);
json to_json(const Parameter &phi, const EpsilonChar &eps);
Parameter parameter_from_json(const json &j, const Alphabet &alphabet);
EpsilonChar epsilon_from_json(const json &j, const Parameter &phi);
json to_json(const EpsilonChar &eps);

std::vector<int> parse_signs(const std::string &csv);

json to_json(const AdmissibleTriple &t);
AdmissibleTriple triple_from_json(const json &j, const Alphabet &alphabet);

json to_json(const SupportResult &r);
json to_json(const RepSymbol &s);
json to_json(const VirtualSum &v);
json to_json(const EndoDatum &d);
json to_json(const LFactor &f);

// "<chi:2..-1>", "<chi:1>", "<chi:>".
Segment parse_segment(const std::string &text, const Alphabet &alphabet);
// Comma separated segments.
GLProduct parse_gl_product(const std::string &text, const Alphabet &alphabet);
// Pieces "chi:3+xi@1/2" separated by commas, as printed by GLRep::str.
GLRep parse_glrep(const std::string &text, const Alphabet &alphabet);

} // namespace dsc::io
