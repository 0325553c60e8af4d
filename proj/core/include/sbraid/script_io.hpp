#pragma once

#include <string>
#include <string_view>

#include "sbraid/derivation.hpp"

namespace sbraid {

// {name, ambient:{preset,n,g}, start, target, steps:[{kind, ...}]} with words
// in the canonical text syntax.  Throws ParseError on malformed input.
std::string script_to_json(const DerivationScript& script, int indent = 2);
DerivationScript script_from_json(std::string_view text);

// {name, pass, steps_checked, failure?, failing_step?}
std::string report_to_json(const DerivationReport& report, int indent = 2);

}  // namespace sbraid
