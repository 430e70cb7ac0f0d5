#pragma once

namespace srlq::cli {

// Full command-line entry point; returns the process exit code.
// 0 = success, 2 = spec/argument validation failure, 3 = solver failure,
// 4 = I/O failure.
int run(int argc, const char* const* argv);

}  // namespace srlq::cli
