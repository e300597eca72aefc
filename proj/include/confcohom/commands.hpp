#pragma once

#include "confcohom/confspace.hpp"
#include "confcohom/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confcohom {

/// Each command returns a result document
/// {"command", "inputs", "result", "checks": [{"name", "passed"}]}.
/// Errors propagate as confcohom::Error subclasses.

/// target: Fm | delta | delta_le | ordinary | cf | bf | sym | cyc
json cmd_poincare(const SpaceSpec& x, const std::string& target, int m, std::optional<int> l);

/// cycle_type: "all" or "1^a,2^b,..."
json cmd_character(const SpaceSpec& x, int m, const std::string& cycle_type);

json cmd_universal(int l, int m, bool closed);

/// generators in cycle notation, e.g. {"(1 2 3)", "(1 2)"}
json cmd_quotient(const SpaceSpec& x, int m, const std::vector<std::string>& generators);

json cmd_stability(const SpaceSpec& x, int degree, int a, int m_first, int m_last);

json cmd_bf_constancy(const SpaceSpec& x, int degree, int m_first, int m_last);

/// Invariant suite on the built-in fixtures; one check per invariant.
json cmd_selftest();

json cmd_fixtures();

/// Every check in doc["checks"] passed.
bool all_checks_passed(const json& doc);

/// Human-readable renderings of a result document.
std::string render_plain(const json& doc);
std::string render_latex(const json& doc);

}  // namespace confcohom
