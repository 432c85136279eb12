#pragma once

// Known-answer corpus: loading, suite execution against either core, and
// the arithmetic-progression message generator used by the long-message
// vectors. The corpus grammar is documented at the top of
// data/maa_vectors.txt.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maa/core.hpp"

namespace maa::kat {

enum class Suite { T1, T2, T3, T4, AnnexE, Long };
enum class CoreKind { Gate, Native };

std::string_view suite_name(Suite suite);
std::string_view core_name(CoreKind core);

/// Lowercase names t1 t2 t3 t4 annexe long; throws ParseError otherwise.
Suite parse_suite(std::string_view name);

/// As parse_suite, plus "all" for every suite in order.
std::vector<Suite> parse_suite_selection(std::string_view name);

/// gate, native or both.
std::vector<CoreKind> parse_core_selection(std::string_view name);

std::span<const Suite> all_suites();

/// Check counts the published test descriptions give for each suite, or
/// nullopt where none is stated.
std::optional<std::size_t> stated_check_count(Suite suite);

struct Field {
  std::string key;
  std::uint64_t value = 0;
  /// Hex digit count (2 or 8), or 0 for a decimal count.
  unsigned digits = 8;
};

struct VectorRecord {
  Suite suite = Suite::T1;
  std::string name;
  std::string op;
  std::vector<Field> inputs;
  std::vector<Field> outputs;
  std::size_t line = 0;

  /// Throws std::out_of_range if absent (records are validated on load).
  std::uint64_t input(std::string_view key) const;
};

struct Corpus {
  std::vector<VectorRecord> records;

  /// One check per expected output field.
  std::size_t check_count(Suite suite) const;
};

/// Throws ParseError (with line and column) on any grammar or schema
/// violation: unknown suite or op, missing inputs, unknown outputs, bad
/// widths, duplicate names.
Corpus parse_corpus(std::string_view text);

Corpus load_corpus(const std::filesystem::path& path);

/// The corpus compiled into the library from data/maa_vectors.txt.
const Corpus& builtin_corpus();

struct Failure {
  std::string check;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  Suite suite = Suite::T1;
  CoreKind core = CoreKind::Gate;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

struct RunOptions {
  /// Byte-to-block mapping used by the long-message checks. Anything but
  /// BigEndian is a deliberate mutation.
  ByteOrder byte_order = ByteOrder::BigEndian;
};

SuiteReport run_suite(const Corpus& corpus, Suite suite, CoreKind core,
                      const RunOptions& options = {});

std::vector<SuiteReport> run_suites(const Corpus& corpus, std::span<const Suite> suites,
                                    std::span<const CoreKind> cores,
                                    const RunOptions& options = {});

/// init, init+incr, init+2*incr, ... (mod 2^32), `count` >= 1 blocks.
std::vector<Block> gen_message(const Block& init, const Block& incr, std::size_t count);

}  // namespace maa::kat
