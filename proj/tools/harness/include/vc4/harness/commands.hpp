#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "vc4/solver.hpp"

namespace vc4::harness {

enum ExitCode : int {
    kExitOk = 0,
    kExitAnswerNo = 1,
    kExitUsage = 2,
    kExitInput = 3,
    kExitAssertion = 4,
};

struct RunConfig {
    std::string command;
    std::string input;
    std::string dir;
    int k = 0;
    bool cover = false;
    std::string trace;
    AssertMode mode = AssertMode::Abort;
    int max_n = 24;  // oracle guard for verify
    int count = 0;
    int n_lo = 5, n_hi = 24;
    std::uint64_t seed = 1;
    std::string report;
    int n = 0;
    std::string profile = "mixed34";
    std::string out;
    std::string vector;
};

/// "A..B" -> {A, B}. Throws std::invalid_argument.
std::pair<int, int> parse_range(std::string_view text);

int cmd_solve(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_minvc(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_bench(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_gen(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_branching_number(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Dispatches on cfg.command and maps exceptions onto exit codes.
int run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err);

}  // namespace vc4::harness
