#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metdim::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kNotLocating = 1;
inline constexpr int kUsage = 2;  // also parse failures
inline constexpr int kDisconnected = 3;
inline constexpr int kResource = 4;
inline constexpr int kDisagreement = 5;
inline constexpr int kInternal = 70;

/// Runs one command line (without the program name). `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace metdim::cli
