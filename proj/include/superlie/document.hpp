#pragma once

// JSON documents for algebras and osp(1,2) modules, and the built-in
// fixtures. Scalars are exact strings ("p/q", "p/q+r/s*i"). Every loader
// throws ParseError on malformed input.

#include "superlie/algebra.hpp"
#include "superlie/osp12.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace superlie {

inline constexpr const char* algebra_format = "superlie-algebra/1";
inline constexpr const char* module_format = "superlie-module/1";

nlohmann::json algebra_to_json(const LieSuperalgebra& L);
/// Brackets are stored as given; a missing [b_j, b_i] is not filled in.
LieSuperalgebra algebra_from_json(const nlohmann::json& doc);

nlohmann::json module_to_json(const Osp12Module& M);
Osp12Module module_from_json(const nlohmann::json& doc);

/// osp12, osp12-corrupted, sl12, sl21, sl13, sl31, gl11, abelian1, heisenberg.
std::vector<std::string> builtin_algebra_names();
/// Throws ParseError for an unknown name.
LieSuperalgebra builtin_algebra(const std::string& name);

/// V<λ>, V2plusV0, sum:<λ,...>, scrambled:<λ,...>:<seed>.
Osp12Module builtin_module(const std::string& name);

/// "builtin:<name>" or a path to a JSON document.
LieSuperalgebra load_algebra(const std::string& source);
Osp12Module load_module(const std::string& source);

/// Reads and parses a JSON file; ParseError if unreadable or malformed.
nlohmann::json read_json_file(const std::string& path);

}  // namespace superlie
