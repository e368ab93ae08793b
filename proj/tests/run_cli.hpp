#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace pseudo::testing {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

/// Runs a shell command, capturing stdout; stderr is folded in when `merge_stderr` is set.
inline CliRun run_command(const std::string& cmd, bool merge_stderr = false) {
    CliRun r;
    std::string full = cmd + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(full.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string data_file(const std::string& name) { return std::string(PSEUDO_DATA_DIR) + "/" + name; }

inline CliRun run_cli(const std::string& args, bool merge_stderr = false) {
    return run_command(std::string(PSEUDO_CLI) + " " + args, merge_stderr);
}

} // namespace pseudo::testing
