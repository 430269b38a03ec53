#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr interleaved
};

/// Runs a shell command, capturing output and the exit code.
inline RunResult run(const std::string& command) {
    RunResult r;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Path to the CLI binary under test, from the environment or a default.
inline std::string cli_path() {
    if (const char* p = std::getenv("COMPALG_CLI")) return p;
    return "./compalg";
}

}  // namespace testsupport
