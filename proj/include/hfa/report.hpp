#pragma once

#include "hfa/binding.hpp"
#include "hfa/laws.hpp"

#include <string>
#include <string_view>

namespace hfa {

/// Binding as JSON: the document layout, except that each family maps member
/// names to full member sets, since members need not be bound as sets.
std::string binding_to_json(const Binding& binding);
/// Throws DocumentError with the offending path.
Binding binding_from_json(std::string_view text);

/// Stable JSON rendering of a suite run. Elapsed times are included only on
/// request so that reports for one configuration are byte-identical.
std::string report_to_json(const LawReport& report, bool include_timing = false);
/// Inverse of `report_to_json`; witnesses come back replayable.
LawReport report_from_json(std::string_view text);

}  // namespace hfa
