#ifndef HOOKBIAS_CLI_HPP
#define HOOKBIAS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hookbias {

/* Command-line surface: btable, verify and table1 subcommands. Exit
 * codes: 0 success, 1 verification failure, 2 usage error. Output is
 * deterministic for a fixed configuration. */
struct RunConfig {
    int t = 3;
    int k = 2;
    int n_max = -1; // -1 picks the per-claim default
    int t_min = 3;
    int t_max = 8;
    int order = 300;
    int jobs = 1;
    std::string format = "csv"; // csv or json
    std::string out;            // empty writes to stdout
};

int cmd_btable(const RunConfig& cfg, std::ostream& data, std::ostream& err);
int cmd_verify(const std::string& claim, const RunConfig& cfg, std::ostream& data,
               std::ostream& err);
int cmd_table1(const RunConfig& cfg, std::ostream& data, std::ostream& err);

// Parses and dispatches; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& data, std::ostream& err);

} // namespace hookbias

#endif
