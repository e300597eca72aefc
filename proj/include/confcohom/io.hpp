#pragma once

#include "confcohom/bipoly.hpp"
#include "confcohom/confspace.hpp"
#include "confcohom/laurent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace confcohom {

using nlohmann::json;

/// SpaceFile document:
/// {"name", "poincare_c": [c_0, c_1, ...], "dim", "i_acyclic", "orientable", "connected"}.
/// Unknown keys are rejected; the flags default to false. Throws ParseError.
SpaceSpec space_from_json(const json& doc);
json space_to_json(const SpaceSpec& x);
SpaceSpec load_space_file(const std::string& path);

/// Built-in fixtures: r1..r4, c, c_minus_1..c_minus_3, cstar, and the
/// non-i-acyclic klein_punctured.
const std::vector<SpaceSpec>& builtin_fixtures();
/// Throws ParseError for an unknown name.
const SpaceSpec& builtin_fixture(const std::string& name);
/// The i-acyclic subset of builtin_fixtures().
std::vector<SpaceSpec> i_acyclic_fixtures();

/// {"<exponent>": coefficient}; coefficients beyond 64 bits are decimal strings.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& doc);
/// {"<P-exponent>,<T-exponent>": coefficient}
json bipoly_to_json(const BiPoly& q);
json integer_to_json(const Integer& z);

std::string poly_to_latex(const LaurentPoly& p);
std::string bipoly_to_latex(const BiPoly& q);

}  // namespace confcohom
