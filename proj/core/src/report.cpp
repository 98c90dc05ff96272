#include "vlp/report.hpp"

#include <sstream>

namespace vlp {

namespace {

void verdict_line(std::ostringstream& os, const char* name, const Verdict& v) {
  os << name << ": " << to_string(v.value);
  if (!v.criterion.empty()) os << " (" << v.criterion << ")";
  os << "\n";
}

void trace_rows(std::ostringstream& os, const LimitVerdict& v, const std::string& prefix) {
  os.precision(17);
  for (const auto& s : v.evidence) os << prefix << s.offset << "," << s.x << "," << s.g_star << "," << s.log_value << "\n";
}

}  // namespace

std::string format_report(const ClassificationReport& r) {
  std::ostringstream os;
  os << "inclusion: " << r.source << " -> " << r.target << "\n";
  verdict_line(os, "embedding", r.embedding);
  switch (r.kind) {
    case ClassificationReport::Kind::pair:
      verdict_line(os, "DSS", r.dss);
      verdict_line(os, "L-weakly compact", r.l_weakly_compact);
      verdict_line(os, "M-weakly compact", r.m_weakly_compact);
      verdict_line(os, "strictly singular", r.strictly_singular);
      break;
    case ClassificationReport::Kind::left_infinity:
      verdict_line(os, "strictly singular", r.strictly_singular);
      verdict_line(os, "DSS", r.dss);
      verdict_line(os, "L-weakly compact", r.l_weakly_compact);
      verdict_line(os, "M-weakly compact", r.m_weakly_compact);
      verdict_line(os, "weakly compact", r.weakly_compact);
      break;
    case ClassificationReport::Kind::right_l1:
      verdict_line(os, "weakly compact", r.weakly_compact);
      verdict_line(os, "DSS", r.dss);
      verdict_line(os, "strictly singular", r.strictly_singular);
      break;
  }
  os.precision(6);
  os << "measure: " << r.domain_measure << "\n";
  if (r.kind == ClassificationReport::Kind::pair) os << "equality set measure: " << r.equality_measure << "\n";
  for (const auto& l : r.limits) {
    os << "limit " << l.label << ": " << to_string(l.verdict.outcome) << " [" << to_string(l.verdict.mode) << ", "
       << l.verdict.evidence.size() << " samples, slope " << l.verdict.slope;
    if (l.verdict.outcome == LimitOutcome::positive) os << ", value " << l.verdict.limit;
    os << "]";
    if (!l.verdict.note.empty()) os << " " << l.verdict.note;
    os << "\n";
  }
  for (const auto& i : r.integrals) {
    os << "integral a=" << i.base << ": " << to_string(i.result.outcome);
    if (i.result.outcome == IntegralOutcome::finite) os << " " << i.result.value;
    if (!i.result.note.empty()) os << " (" << i.result.note << ")";
    os << "\n";
  }
  if (r.log_holder_p) os << "log-Hoelder constant of p: " << *r.log_holder_p << "\n";
  if (r.log_holder_q) os << "log-Hoelder constant of q: " << *r.log_holder_q << "\n";
  if (r.gap_ess_inf) os << "ess inf(p-q): " << *r.gap_ess_inf << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string evidence_csv(const LimitVerdict& verdict) {
  std::ostringstream os;
  os << "offset,x,g_star,log_value\n";
  trace_rows(os, verdict, "");
  return os.str();
}

std::string evidence_csv(const ClassificationReport& report) {
  std::ostringstream os;
  os << "limit,offset,x,g_star,log_value\n";
  for (const auto& l : report.limits) trace_rows(os, l.verdict, "\"" + l.label + "\",");
  return os.str();
}

}  // namespace vlp
