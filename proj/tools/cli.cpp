#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "maa/error.hpp"
#include "maa/kat.hpp"
#include "maa/native.hpp"

namespace maa::cli {

namespace {

constexpr std::uint32_t kBenchIncrement = 0x07050301;

std::vector<std::string_view> tokenize(std::string_view line, std::vector<std::size_t>& columns) {
  std::vector<std::string_view> tokens;
  std::size_t pos = line.find_first_not_of(" \t");
  while (pos != std::string_view::npos) {
    const std::size_t end = std::min(line.find_first_of(" \t", pos), line.size());
    tokens.push_back(line.substr(pos, end - pos));
    columns.push_back(pos + 1);
    pos = line.find_first_not_of(" \t", end);
  }
  return tokens;
}

Block block_token(std::string_view token, std::size_t line, std::size_t column) {
  try {
    return parse_block(token);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, column + (e.column() ? e.column() - 1 : 0));
  }
}

std::string where(const ParseError& e) {
  std::string s;
  if (e.line() != 0) s += "line " + std::to_string(e.line()) + ": ";
  return s + e.what();
}

// Message source shared by mac and trace.
struct InputArgs {
  std::string key;
  std::string input;
  std::string hex;
};

std::vector<std::uint8_t> load_payload(const InputArgs& a) {
  std::vector<std::uint8_t> bytes = a.input.empty() ? parse_message_hex(a.hex)
                                                     : read_message_file(a.input);
  if (bytes.empty()) throw EmptyMessageError("message is empty");
  return bytes;
}

void add_input_options(CLI::App* cmd, InputArgs& a) {
  cmd->add_option("--key", a.key, "16 hex digits, J then K")->required();
  auto* input = cmd->add_option("--input", a.input, "message file (raw bytes)");
  auto* hex = cmd->add_option("--hex", a.hex, "message as an even-length hex string");
  input->excludes(hex);
  hex->excludes(input);
  cmd->require_option(1, 2);
}

int cmd_mac(const InputArgs& a, std::ostream& out) {
  const Key key = parse_key_arg(a.key);
  const std::vector<std::uint8_t> bytes = load_payload(a);
  out << to_hex(mac_message(key, bytes)) << '\n';
  return kExitOk;
}

int cmd_trace(const InputArgs& a, std::ostream& out) {
  const Key key = parse_key_arg(a.key);
  const std::vector<Block> blocks = pack_blocks(load_payload(a));
  if (blocks.size() >= kDefaultBlockLimit) {
    throw SizeLimitError("message must contain fewer than " +
                         std::to_string(kDefaultBlockLimit) + " blocks");
  }
  MacStream stream(key);
  out << std::left << std::setw(8) << "index" << std::setw(10) << "block" << std::setw(10) << "X"
      << std::setw(10) << "Y" << std::setw(10) << "V" << "Z\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const CycleOutput c = stream.push_cycle(blocks[i]);
    out << std::setw(8) << i + 1 << std::setw(10) << to_hex(blocks[i]) << std::setw(10)
        << to_hex(c.x) << std::setw(10) << to_hex(c.y) << std::setw(10) << to_hex(c.v)
        << to_hex(c.z) << '\n';
  }
  out << "MAC " << to_hex(stream.finish()) << '\n';
  return kExitOk;
}

int cmd_selftest(const std::string& suite, const std::string& core, const std::string& corpus_path,
                 bool verbose, std::ostream& out) {
  const std::vector<kat::Suite> suites = kat::parse_suite_selection(suite);
  const std::vector<kat::CoreKind> cores = kat::parse_core_selection(core);
  const kat::Corpus corpus =
      corpus_path.empty() ? kat::builtin_corpus() : kat::load_corpus(corpus_path);

  std::size_t total = 0;
  std::size_t passed = 0;
  bool ok = true;
  out << std::left << std::setw(8) << "suite" << std::setw(8) << "core" << std::setw(10)
      << "passed" << "status\n";
  for (const kat::SuiteReport& r : kat::run_suites(corpus, suites, cores)) {
    total += r.total;
    passed += r.passed;
    ok = ok && r.ok() && r.total > 0;
    const std::string ratio = std::to_string(r.passed) + "/" + std::to_string(r.total);
    out << std::setw(8) << kat::suite_name(r.suite) << std::setw(8) << kat::core_name(r.core)
        << std::setw(10) << ratio << (r.ok() && r.total > 0 ? "PASS" : "FAIL");
    const auto stated = kat::stated_check_count(r.suite);
    if (verbose && stated && *stated != r.total) out << "  (stated count " << *stated << ")";
    out << '\n';
    for (const kat::Failure& f : r.failures) {
      out << "  " << f.check << ": expected " << f.expected << ", got " << f.actual << '\n';
    }
  }
  out << "total " << passed << "/" << total << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_scenario(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario " + path);
  const ScenarioReport report = run_scenario(parse_scenario(in));
  std::size_t passed = 0;
  for (const ExpectResult& r : report.results) {
    out << "line " << r.line << ": cycle " << r.cycle << " " << r.output << " expected "
        << to_hex(r.expected) << ", got " << to_hex(r.actual)
        << (r.passed() ? " ok" : " FAIL") << '\n';
    passed += r.passed() ? 1 : 0;
  }
  out << passed << "/" << report.results.size() << " expectations passed over "
      << report.cycles << " cycles" << '\n';
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_bench(std::uint64_t count, std::ostream& out) {
  if (count == 0) throw std::invalid_argument("block count must be at least 1");
  if (count >= kDefaultBlockLimit) {
    throw SizeLimitError("message must contain fewer than " +
                         std::to_string(kDefaultBlockLimit) + " blocks");
  }
  const Key key = Key::from_hex("8001800180018000");
  const std::vector<Block> blocks =
      kat::gen_message(Block::from_uint(0), Block::from_uint(kBenchIncrement), count);
  std::vector<native::Word> words;
  words.reserve(blocks.size());
  for (const Block& b : blocks) words.push_back(b.to_uint());

  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  const Block gate = mac_blocks(key, blocks);
  const auto t1 = Clock::now();
  const native::Word fast = native::mac(native::to_native(key), words);
  const auto t2 = Clock::now();

  const auto report = [&](std::string_view name, double seconds, std::uint32_t mac) {
    const double rate = seconds > 0 ? static_cast<double>(count) / seconds : 0.0;
    out << std::left << std::setw(8) << name << to_hex(Block::from_uint(mac)) << "  "
        << std::fixed << std::setprecision(6) << seconds << " s  " << std::setprecision(0)
        << rate << " blocks/s\n";
  };
  out << count << " blocks, key 8001800180018000, INIT 00000000, INCR 07050301\n";
  report("gate", std::chrono::duration<double>(t1 - t0).count(), gate.to_uint());
  report("native", std::chrono::duration<double>(t2 - t1).count(), fast);
  if (gate.to_uint() != fast) {
    out << "cores disagree\n";
    return kExitCheckFailed;
  }
  out << "cores agree\n";
  return kExitOk;
}

}  // namespace

Key parse_key_arg(std::string_view text) {
  if (text.size() != 16) {
    throw ParseError("key must be exactly 16 hex digits (J then K), got " +
                     std::to_string(text.size()));
  }
  return Key::from_hex(text);
}

std::vector<std::uint8_t> parse_message_hex(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw ParseError("message hex must have an even number of digits, got " +
                         std::to_string(text.size()),
                     0, text.size());
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    try {
      bytes.push_back(parse_octet(text.substr(i, 2)).to_uint());
    } catch (const ParseError& e) {
      const std::size_t column = i + e.column();
      throw ParseError("invalid hex digit '" + std::string(1, text[column - 1]) +
                           "' at position " + std::to_string(column),
                       0, column);
    }
  }
  return bytes;
}

std::vector<std::uint8_t> read_message_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::string text;
  std::size_t line = 0;
  bool have_key = false;
  bool have_block = false;
  while (std::getline(in, text)) {
    ++line;
    std::string_view view = text;
    if (const std::size_t hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    std::vector<std::size_t> cols;
    const std::vector<std::string_view> tok = tokenize(view, cols);
    if (tok.empty()) continue;

    Command c;
    c.line = line;
    const std::string_view verb = tok[0];
    const auto arity = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() < lo + 1 || tok.size() > hi + 1) {
        throw ParseError("wrong number of arguments to " + std::string(verb), line, cols[0]);
      }
    };
    if (verb == "key") {
      arity(2, 2);
      c.kind = Command::Kind::SetKey;
      c.first = block_token(tok[1], line, cols[1]);
      c.second = block_token(tok[2], line, cols[2]);
      have_key = true;
      have_block = false;
    } else if (verb == "block") {
      arity(1, 1);
      if (!have_key) throw ParseError("block before any key", line, cols[0]);
      c.kind = Command::Kind::Block;
      c.first = block_token(tok[1], line, cols[1]);
      have_block = true;
    } else if (verb == "expect") {
      arity(2, 2);
      if (!have_block) throw ParseError("expect before any block", line, cols[0]);
      if (tok[1].size() != 1 || std::string_view("XYVZ").find(tok[1][0]) == std::string_view::npos) {
        throw ParseError("expect output must be X, Y, V or Z", line, cols[1]);
      }
      c.kind = Command::Kind::Expect;
      c.output = tok[1][0];
      c.first = block_token(tok[2], line, cols[2]);
    } else if (verb == "cycle") {
      arity(0, 1);
      if (!have_block) throw ParseError("cycle before any block", line, cols[0]);
      c.kind = Command::Kind::Cycle;
      if (tok.size() == 2) {
        unsigned n = 0;
        const auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
        if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size() || n == 0) {
          throw ParseError("cycle count must be a positive integer", line, cols[1]);
        }
        c.count = n;
      }
    } else if (verb == "reset") {
      arity(0, 0);
      if (!have_key) throw ParseError("reset before any key", line, cols[0]);
      c.kind = Command::Kind::Reset;
    } else {
      throw ParseError("unknown command '" + std::string(verb) + "'", line, cols[0]);
    }
    s.commands.push_back(c);
  }
  return s;
}

bool ScenarioReport::ok() const {
  for (const ExpectResult& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

ScenarioReport run_scenario(const Scenario& scenario) {
  ScenarioReport report;
  std::optional<MacStream> stream;
  std::optional<Block> input;
  bool input_pending = false;
  std::vector<const Command*> pending;

  const auto cycle = [&](unsigned n) {
    CycleOutput o{};
    for (unsigned i = 0; i < n; ++i) {
      o = stream->push_cycle(*input);
      ++report.cycles;
    }
    for (const Command* e : pending) {
      const Block actual = e->output == 'X'   ? o.x
                           : e->output == 'Y' ? o.y
                           : e->output == 'V' ? o.v
                                              : o.z;
      report.results.push_back({e->line, e->output, e->first, actual, stream->blocks()});
    }
    pending.clear();
    input_pending = false;
  };
  const auto flush = [&] {
    if (input_pending || !pending.empty()) cycle(1);
  };

  for (const Command& c : scenario.commands) {
    switch (c.kind) {
      case Command::Kind::SetKey:
        flush();
        stream.emplace(Key{c.first, c.second});
        input.reset();
        break;
      case Command::Kind::Block:
        flush();
        input = c.first;
        input_pending = true;
        break;
      case Command::Kind::Expect:
        if (!input) throw ParseError("expect before any block", c.line);
        pending.push_back(&c);
        break;
      case Command::Kind::Cycle:
        if (!input) throw ParseError("cycle before any block", c.line);
        cycle(c.count);
        break;
      case Command::Kind::Reset:
        flush();
        stream->restart();
        break;
    }
  }
  flush();
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Message Authenticator Algorithm (MAA) tool"};
  app.require_subcommand(1);

  InputArgs mac_args;
  auto* mac = app.add_subcommand("mac", "print the MAC of a message");
  add_input_options(mac, mac_args);

  InputArgs trace_args;
  auto* trace = app.add_subcommand("trace", "print X, Y, V and the running Z per block");
  add_input_options(trace, trace_args);

  std::string suite = "all";
  std::string core = "both";
  std::string corpus;
  bool verbose = false;
  auto* selftest = app.add_subcommand("selftest", "run the known-answer vectors");
  selftest->add_option("--suite", suite, "t1|t2|t3|t4|annexe|long|all");
  selftest->add_option("--core", core, "gate|native|both");
  selftest->add_option("--corpus", corpus, "vector file instead of the built-in corpus");
  selftest->add_flag("-v,--verbose", verbose, "note where a suite's size differs from its stated count");

  std::string scenario_path;
  auto* scenario = app.add_subcommand("scenario", "run a scenario file");
  scenario->add_option("path", scenario_path)->required();

  std::uint64_t bench_blocks = 4100;
  auto* bench = app.add_subcommand("bench", "time both cores on a generated message");
  bench->add_option("--blocks", bench_blocks, "message length in blocks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mac) return cmd_mac(mac_args, out);
    if (*trace) return cmd_trace(trace_args, out);
    if (*selftest) return cmd_selftest(suite, core, corpus, verbose, out);
    if (*scenario) return cmd_scenario(scenario_path, out);
    if (*bench) return cmd_bench(bench_blocks, out);
  } catch (const ParseError& e) {
    err << "error: " << where(e) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"maa"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace maa::cli
