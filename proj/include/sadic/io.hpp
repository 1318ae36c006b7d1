#ifndef SADIC_IO_HPP
#define SADIC_IO_HPP

#include <string>

#include <json.hpp>

#include "sadic/cf_algorithms.hpp"
#include "sadic/fractal.hpp"
#include "sadic/words.hpp"

namespace sadic {

using Json = nlohmann::json;

// {"name": ..., "alphabet_size": n, "images": {"0": "02", ...}}
Substitution substitution_from_json(const Json& j);
Json to_json(const Substitution& s);

// Either an array of substitutions or {"substitutions": [...]}.
SubstitutionSet substitution_set_from_json(const Json& j);
Json to_json(const SubstitutionSet& set);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// A preset name is looked up as <dir>/<name>.json in $SADIC_PRESETS, then in the
// source tree; anything containing '/' or ending in .json is read as a path.
std::string preset_path(const std::string& name);
Json load_preset(const std::string& name);

// "a,b,c" (decimals or p/q), "eigen:<names>" (Perron direction of the product,
// rounded to doubles) or "random:<seed>" (uniform on the simplex).
Vec<Rational> parse_direction(const Algorithm& alg, const std::string& text);

// [{"center": ["re", "im"], "radius": "r"}, ...]
std::vector<Ball> balls_from_json(const Json& j);

}  // namespace sadic

#endif
