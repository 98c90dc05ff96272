#pragma once

#include <string>

#include "vlp/criteria.hpp"

namespace vlp {

/// Plain-text report, one "Name: value (criterion)" line per verdict
/// followed by evidence and notes.
std::string format_report(const ClassificationReport& report);

/// CSV of a limit trace with header "offset,x,g_star,log_value".
std::string evidence_csv(const LimitVerdict& verdict);

/// All limit traces of a report, prefixed by a "limit" column.
std::string evidence_csv(const ClassificationReport& report);

}  // namespace vlp
