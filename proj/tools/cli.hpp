#pragma once

// Command-line front end. Everything but main() lives here so the tests can
// drive commands in-process.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "maa/core.hpp"

namespace maa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Exactly 16 hex digits, J then K.
Key parse_key_arg(std::string_view text);

/// Even-length hex string to bytes. Errors carry the 1-based position.
std::vector<std::uint8_t> parse_message_hex(std::string_view text);

std::vector<std::uint8_t> read_message_file(const std::string& path);

// --- Scenarios ------------------------------------------------------------

struct Command {
  enum class Kind { SetKey, Block, Expect, Cycle, Reset };
  Kind kind = Kind::Block;
  std::size_t line = 0;
  maa::Block first{};   // J, block or expected value
  maa::Block second{};  // K
  char output = 'Z';    // X, Y, V or Z
  unsigned count = 1;
};

struct Scenario {
  std::vector<Command> commands;
};

/// Throws ParseError with the offending line for grammar errors, a block
/// before any key, or an expect/cycle with no block to act on.
Scenario parse_scenario(std::istream& in);

struct ExpectResult {
  std::size_t line = 0;
  char output = 'Z';
  maa::Block expected{};
  maa::Block actual{};
  std::uint64_t cycle = 0;  // block count of the stream when checked
  bool passed() const { return expected == actual; }
};

struct ScenarioReport {
  std::vector<ExpectResult> results;
  std::uint64_t cycles = 0;
  bool ok() const;
};

/// Inputs are held between cycles. Expects attach to the next cycle; a
/// cycle runs implicitly before the next key, block or reset line and at
/// end of input whenever a block or expect is still pending.
ScenarioReport run_scenario(const Scenario& scenario);

// --- Entry ----------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maa::cli
