#include "gossamer/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "gossamer/errors.hpp"

namespace gossamer {

void VerificationReport::finalize() {
  std::sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  summary.passed = static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
  summary.failed = cases.size() - summary.passed;
}

std::string VerificationReport::to_json(bool include_timing) const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["suite"] = suite;
  doc["cases"] = ordered_json::array();
  for (const auto& c : cases) {
    doc["cases"].push_back(ordered_json{{"id", c.id},
                                        {"inputs", c.inputs},
                                        {"expected", c.expected},
                                        {"actual", c.actual},
                                        {"pass", c.pass}});
  }
  ordered_json s{{"passed", summary.passed}, {"failed", summary.failed}};
  if (include_timing) s["duration_ms"] = summary.duration_ms;
  doc["summary"] = std::move(s);
  return doc.dump(2);
}

VerificationReport VerificationReport::from_json(std::string_view text) {
  using nlohmann::json;
  try {
    const json doc = json::parse(text);
    VerificationReport r;
    r.suite = doc.at("suite").get<std::string>();
    for (const auto& c : doc.at("cases")) {
      r.cases.push_back({c.at("id").get<std::string>(), c.at("inputs").get<std::string>(),
                         c.at("expected").get<std::string>(), c.at("actual").get<std::string>(),
                         c.at("pass").get<bool>()});
    }
    const auto& s = doc.at("summary");
    r.summary.passed = s.at("passed").get<std::size_t>();
    r.summary.failed = s.at("failed").get<std::size_t>();
    r.summary.duration_ms = s.value("duration_ms", 0.0);
    return r;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(text), e.byte, "valid JSON report");
  } catch (const json::exception& e) {
    throw ParseError(std::string(text), 0, std::string("report fields (") + e.what() + ")");
  }
}

std::string VerificationReport::to_text(bool verbose) const {
  std::ostringstream out;
  for (const auto& c : cases) {
    if (c.pass && !verbose) continue;
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.inputs << "\n";
    if (!c.pass || verbose) out << "     expected: " << c.expected << "\n     actual:   " << c.actual << "\n";
  }
  out << "suite " << suite << ": " << summary.passed << " passed, " << summary.failed << " failed";
  out << " (" << static_cast<long long>(summary.duration_ms) << " ms)\n";
  return out.str();
}

}  // namespace gossamer
