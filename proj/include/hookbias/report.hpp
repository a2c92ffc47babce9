#ifndef HOOKBIAS_REPORT_HPP
#define HOOKBIAS_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hookbias {

struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;
};

/* Structured outcome of a single claim check. status is "fail" exactly
 * when counterexamples is nonempty; a skipped report carries the reason
 * (documented exemptions such as the level-7 appendix case). */
struct VerificationReport {
    enum class Status { pass, fail, skipped };

    std::string claim_id;
    std::string range;
    Status status = Status::pass;
    std::string skip_reason;
    std::vector<Counterexample> counterexamples;
    std::string note; // recorded findings, e.g. a computed support set
    std::int64_t runtime_ms = 0;

    bool ok() const { return status != Status::fail; }

    void add_failure(std::string input, std::string expected, std::string actual);
    void finish(); // sets status from the counterexample list

    std::string to_json_line() const;
    std::string summary_line() const;
};

std::string status_name(VerificationReport::Status s);

} // namespace hookbias

#endif
