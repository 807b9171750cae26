#pragma once

#include <cstdint>
#include <string>

#include "corput/interval_map.hpp"

namespace corput {

/// Evaluates a numeric constant expression: decimal literals, the constants
/// phi and sqrt2, parentheses, unary minus and + - * /.
double parse_expr(const std::string& text);

/// Loads a map definition from a JSON document of the form
///   { "name": "...", "branches": [ { "left": ..., "right": ..., "sign": 1,
///     "slope": ..., "image_left": ..., "image_right": ... }, ... ] }
/// where numeric fields are numbers or expression strings ("1/phi").
PLMap load_map_json(const std::string& json_text);
PLMap load_map_file(const std::string& path);

/// FNV-1a digest of the branch data; identifies a map in output headers.
std::uint64_t map_hash(const PLMap& map);

// Built-in test maps.
PLMap doubling_map();
PLMap tent_map();
PLMap golden_mean_map();
PLMap full_shift_map(int cells); // cells equal branches onto [0,1)
PLMap beta_map(double beta);     // x -> beta x (mod 1), non-Markov for generic beta
PLMap two_block_map();           // two disjoint full shifts (non-ergodic)

} // namespace corput
