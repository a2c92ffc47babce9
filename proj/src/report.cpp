#include "hookbias/report.hpp"

#include <json.hpp>

namespace hookbias {

void VerificationReport::add_failure(std::string input, std::string expected, std::string actual)
{
    counterexamples.push_back({std::move(input), std::move(expected), std::move(actual)});
    status = Status::fail;
}

void VerificationReport::finish()
{
    if (status != Status::skipped)
        status = counterexamples.empty() ? Status::pass : Status::fail;
}

std::string status_name(VerificationReport::Status s)
{
    switch (s) {
    case VerificationReport::Status::pass: return "pass";
    case VerificationReport::Status::fail: return "fail";
    case VerificationReport::Status::skipped: return "skipped";
    }
    return "?";
}

std::string VerificationReport::to_json_line() const
{
    nlohmann::ordered_json j;
    j["claim"] = claim_id;
    j["range"] = range;
    j["status"] = status_name(status);
    if (status == Status::skipped)
        j["skip_reason"] = skip_reason;
    auto ces = nlohmann::ordered_json::array();
    for (const auto& ce : counterexamples) {
        nlohmann::ordered_json e;
        e["input"] = ce.input;
        e["expected"] = ce.expected;
        e["actual"] = ce.actual;
        ces.push_back(e);
    }
    j["counterexamples"] = ces;
    if (!note.empty())
        j["note"] = note;
    j["runtime_ms"] = runtime_ms;
    return j.dump();
}

std::string VerificationReport::summary_line() const
{
    std::string line = "[" + status_name(status) + "] " + claim_id + " (" + range + ")";
    if (!note.empty())
        line += " -- " + note;
    if (status == Status::skipped)
        line += " -- " + skip_reason;
    if (!counterexamples.empty()) {
        line += " -- first counterexample: input=" + counterexamples.front().input +
                " expected=" + counterexamples.front().expected +
                " actual=" + counterexamples.front().actual;
    }
    return line;
}

} // namespace hookbias
