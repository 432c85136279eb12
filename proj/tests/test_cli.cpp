#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "maa/core.hpp"
#include "maa/error.hpp"

using namespace maa;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("maa_test_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

cli::ScenarioReport scenario(const std::string& text) {
  std::istringstream in(text);
  return cli::run_scenario(cli::parse_scenario(in));
}

std::size_t scenario_error_line(const std::string& text) {
  try {
    scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const std::string kScenarios = MAA_SOURCE_DIR "/scenarios/";

}  // namespace

TEST_CASE("mac prints the uppercase MAC") {
  const Run r = run({"mac", "--key", "00FF00FF00000000", "--hex", "55555555AAAAAAAA"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "F14D6E28\n");
  CHECK(run({"mac", "--key", "00ff00ff00000000", "--hex", "55555555aaaaaaaa"}).out == "F14D6E28\n");
}

TEST_CASE("mac reads raw message files") {
  const std::string path = temp_file("zeros.bin", std::string(80, '\0'));
  const Run r = run({"mac", "--key", "8001800180018000", "--input", path});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "DB79FBDC\n");
}

TEST_CASE("mac pads the last block with zero bytes") {
  const Key k = Key::from_hex("0123456789ABCDEF");
  const std::vector<Block> blocks{Block::from_uint(0x07050301), Block::from_uint(0x55000000)};
  const Run r = run({"mac", "--key", "0123456789ABCDEF", "--hex", "0705030155"});
  CHECK(r.out == to_hex(mac_blocks(k, blocks)) + "\n");
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"mac", "--key", "00FF00FF0000000", "--hex", "00"}).code == cli::kExitUsage);
  CHECK(run({"mac", "--key", "00FF00FF000000000", "--hex", "00"}).code == cli::kExitUsage);
  CHECK(run({"mac", "--key", "00FF00FF0000000Z", "--hex", "00"}).code == cli::kExitUsage);
  const Run odd = run({"mac", "--key", "00FF00FF00000000", "--hex", "555"});
  CHECK(odd.code == cli::kExitUsage);
  CHECK(odd.err.find("even") != std::string::npos);
  const Run bad = run({"mac", "--key", "00FF00FF00000000", "--hex", "55x5"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("position 3") != std::string::npos);
  CHECK(run({"mac", "--key", "00FF00FF00000000", "--hex", ""}).code == cli::kExitUsage);
  CHECK(run({"mac", "--key", "00FF00FF00000000", "--input", temp_file("empty.bin", "")}).code ==
        cli::kExitUsage);
  CHECK(run({"mac", "--key", "00FF00FF00000000", "--input", "/nonexistent/file"}).code ==
        cli::kExitUsage);
  CHECK(run({"mac", "--key", "00FF00FF00000000"}).code == cli::kExitUsage);
  CHECK(run({"mac", "--key", "00FF00FF00000000", "--hex", "00", "--input", "x"}).code ==
        cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("message hex parser") {
  CHECK(cli::parse_message_hex("00ff10").size() == 3);
  CHECK(cli::parse_message_hex("").empty());
  CHECK_THROWS_AS(cli::parse_message_hex("0"), ParseError);
  try {
    cli::parse_message_hex("0011g2");
    FAIL("accepted a non-hex digit");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("trace prints one row per block and the running MAC") {
  const Run r = run({"trace", "--key", "8001800180018000", "--hex", std::string(160, '0')});
  REQUIRE(r.code == cli::kExitOk);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  REQUIRE(rows.size() == 22);
  CHECK(rows[1].find("303FF4AA  1277A6D4") != std::string::npos);
  CHECK(rows[20].find("5EBA06C2  91896CFA") != std::string::npos);
  CHECK(rows[20].rfind("DB79FBDC") == rows[20].size() - 8);
  CHECK(rows[21] == "MAC DB79FBDC");
}

TEST_CASE("trace of a single block shows the MAC of that block") {
  const Run r = run({"trace", "--key", "0000000100000002", "--hex", "00000000"});
  const Key k = Key::from_hex("0000000100000002");
  const std::vector<Block> one(1);
  CHECK(r.out.find("MAC " + to_hex(mac_blocks(k, one))) != std::string::npos);
}

TEST_CASE("selftest") {
  const Run t3 = run({"selftest", "--suite", "t3", "--core", "gate"});
  CHECK(t3.code == cli::kExitOk);
  CHECK(t3.out.find("64/64") != std::string::npos);
  const Run lng = run({"selftest", "--suite", "long"});
  CHECK(lng.code == cli::kExitOk);
  CHECK(lng.out.find("long    gate    4/4") != std::string::npos);
  CHECK(lng.out.find("long    native  4/4") != std::string::npos);
  const Run all = run({"selftest", "--suite", "all", "--core", "both"});
  CHECK(all.code == cli::kExitOk);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(run({"selftest", "--suite", "t7"}).code == cli::kExitUsage);
  CHECK(run({"selftest", "--core", "quantum"}).code == cli::kExitUsage);
}

TEST_CASE("selftest on a corpus with a wrong value exits 1") {
  const std::string path =
      temp_file("bad_corpus.txt", "t1 bad mul1 in:a=0000000F,b=0000000E out:r=000000D3\n");
  const Run r = run({"selftest", "--suite", "t1", "--corpus", path});
  CHECK(r.code == cli::kExitCheckFailed);
  CHECK(r.out.find("bad.r: expected 000000D3, got 000000D2") != std::string::npos);
  const std::string broken = temp_file("broken_corpus.txt", "t1 bad mul1\n");
  const Run b = run({"selftest", "--corpus", broken});
  CHECK(b.code == cli::kExitUsage);
  CHECK(b.err.find("line 1") != std::string::npos);
}

TEST_CASE("shipped scenarios pass") {
  for (const char* name : {"first_block.maa", "two_blocks.maa", "zero_blocks.maa"}) {
    CAPTURE(name);
    const Run r = run({"scenario", kScenarios + name});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("scenario semantics") {
  const auto r = scenario(
      "key 00FF00FF 00000000\n"
      "block 55555555\n"
      "expect X 48B204D6\n"
      "expect Y 5834A585\n"
      "block AAAAAAAA\n"
      "expect Z F14D6E28\n");
  CHECK(r.ok());
  CHECK(r.results.size() == 3);
  CHECK(r.cycles == 2);
  CHECK(r.results[2].cycle == 2);

  // Expectations attach to the next cycle; held input repeats.
  const auto held = scenario(
      "key 80018001 80018000\n"
      "block 00000000\n"
      "cycle 19\n"
      "expect X 5EBA06C2\n"
      "expect Z DB79FBDC\n");
  CHECK(held.ok());
  CHECK(held.cycles == 20);

  const auto reset = scenario(
      "key 00FF00FF 00000000\n"
      "block 55555555\n"
      "cycle\n"
      "reset\n"
      "block 55555555\n"
      "expect X 48B204D6\n");
  CHECK(reset.ok());
  CHECK(reset.results[0].cycle == 1);
}

TEST_CASE("a wrong scenario expectation fails with exit 1") {
  const auto r = scenario("key 00FF00FF 00000000\nblock 55555555\nexpect X 00000000\n");
  REQUIRE(r.results.size() == 1);
  CHECK_FALSE(r.ok());
  CHECK(r.results[0].actual == Block::from_uint(0x48B204D6));
  const std::string path =
      temp_file("bad.maa", "key 00FF00FF 00000000\nblock 55555555\nexpect X 00000000\n");
  const Run run_result = run({"scenario", path});
  CHECK(run_result.code == cli::kExitCheckFailed);
  CHECK(run_result.out.find("FAIL") != std::string::npos);
}

TEST_CASE("scenario parse errors carry the line") {
  CHECK(scenario_error_line("key 00FF00FF 00000000\nexpect X 00000000\n") == 2);
  CHECK(scenario_error_line("# comment\nblock 00000000\n") == 2);
  CHECK(scenario_error_line("key 00FF00FF\n") == 1);
  CHECK(scenario_error_line("key 00FF00FF 0000000G\n") == 1);
  CHECK(scenario_error_line("key 00FF00FF 00000000\nblock 00000000\nexpect W 00000000\n") == 3);
  CHECK(scenario_error_line("key 00FF00FF 00000000\nblock 00000000\ncycle 0\n") == 3);
  CHECK(scenario_error_line("key 00FF00FF 00000000\nblock 00000000\ncycle x\n") == 3);
  CHECK(scenario_error_line("key 00FF00FF 00000000\ncycle\n") == 2);
  CHECK(scenario_error_line("reset\n") == 1);
  CHECK(scenario_error_line("jump 3\n") == 1);
  const std::string path = temp_file("broken.maa", "\n\nblock 00000000\n");
  const Run r = run({"scenario", path});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("bench compares the cores") {
  const Run r = run({"bench", "--blocks", "4100"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("gate    7783C51D") != std::string::npos);
  CHECK(r.out.find("native  7783C51D") != std::string::npos);
  CHECK(r.out.find("cores agree") != std::string::npos);
  CHECK(run({"bench", "--blocks", "1"}).code == cli::kExitOk);
  CHECK(run({"bench", "--blocks", "513"}).code == cli::kExitOk);
  CHECK(run({"bench", "--blocks", "0"}).code == cli::kExitUsage);
  CHECK(run({"bench", "--blocks", "1000000"}).code == cli::kExitUsage);
}
