#include "maa/kat.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "maa/error.hpp"
#include "maa/native.hpp"

namespace maa::kat {

namespace detail {
extern const std::string_view kBuiltinCorpus;
}

namespace {

constexpr std::array kSuites{Suite::T1, Suite::T2, Suite::T3, Suite::T4, Suite::AnnexE, Suite::Long};

struct Value {
  std::uint64_t value = 0;
  unsigned digits = 8;
};

using Outputs = std::map<std::string, Value, std::less<>>;

std::string render(const Value& v) {
  if (v.digits == 0) return std::to_string(v.value);
  std::string s = to_hex(Pair::from_uint(v.value));
  return s.substr(s.size() - v.digits);
}

// --- Core adaptors --------------------------------------------------------

struct GateAdaptor {
  using Word = Block;
  using Byte = Octet;

  static Word word(std::uint64_t v) { return Block::from_uint(static_cast<std::uint32_t>(v)); }
  static Byte byte(std::uint64_t v) { return Octet::from_uint(static_cast<std::uint8_t>(v)); }
  static Value value(const Block& w) { return {w.to_uint(), 8}; }
  static Value value(const Octet& o) { return {o.to_uint(), 2}; }

  static Word mul1(Word a, Word b) { return maa::mul1(a, b); }
  static Word mul2(Word a, Word b) { return maa::mul2(a, b); }
  static Word mul2a(Word a, Word b) { return maa::mul2a(a, b); }
  static Word q(Byte p) { return maa::q(p); }
  static Byte pat(Word a, Word b) { return maa::pat(a, b); }
  static std::pair<Word, Word> byt(Word a, Word b) { return maa::byt(a, b); }
  static PreludeTraceT<Word> prelude_chain(Word j1, Word k1, Byte p) {
    return maa::prelude_chain(j1, k1, p);
  }
  static PreludeTraceT<Word> prelude_trace(Word j, Word k) { return maa::prelude_trace({j, k}); }
  static LoopStateT<Word> main_loop(const LoopStateT<Word>& s, Word w, Word m) {
    return maa::main_loop(s, w, m);
  }
  static Word coda(const LoopStateT<Word>& s, Word w, Word sb, Word t) {
    return maa::coda(s, w, sb, t);
  }
  static LoopTraceT<Word> loop_trace(const LoopStateT<Word>& s, Word w, Word m,
                                     const LoopConstantsT<Word>& c) {
    return maa::loop_trace(s, w, m, c);
  }
  static Value mac_bytes(Word j, Word k, std::span<const std::uint8_t> bytes, ByteOrder order) {
    return value(maa::mac_message({j, k}, bytes, kDefaultBlockLimit, order));
  }
};

struct NativeAdaptor {
  using Word = std::uint32_t;
  using Byte = std::uint8_t;

  static Word word(std::uint64_t v) { return static_cast<Word>(v); }
  static Byte byte(std::uint64_t v) { return static_cast<Byte>(v); }
  static Value value(Word w) { return {w, 8}; }
  static Value value(Byte b) { return {b, 2}; }

  static Word mul1(Word a, Word b) { return native::mul1(a, b); }
  static Word mul2(Word a, Word b) { return native::mul2(a, b); }
  static Word mul2a(Word a, Word b) { return native::mul2a(a, b); }
  static Word q(Byte p) { return native::q(p); }
  static Byte pat(Word a, Word b) { return native::pat(a, b); }
  static std::pair<Word, Word> byt(Word a, Word b) { return native::byt(a, b); }
  static PreludeTraceT<Word> prelude_chain(Word j1, Word k1, Byte p) {
    return native::prelude_chain(j1, k1, p);
  }
  static PreludeTraceT<Word> prelude_trace(Word j, Word k) {
    return native::prelude_trace({j, k});
  }
  static LoopStateT<Word> main_loop(const LoopStateT<Word>& s, Word w, Word m) {
    return native::main_loop(s, w, m);
  }
  static Word coda(const LoopStateT<Word>& s, Word w, Word sb, Word t) {
    return native::coda(s, w, sb, t);
  }
  static LoopTraceT<Word> loop_trace(const LoopStateT<Word>& s, Word w, Word m,
                                     const LoopConstantsT<Word>& c) {
    return native::loop_trace(s, w, m, c);
  }
  static Value mac_bytes(Word j, Word k, std::span<const std::uint8_t> bytes, ByteOrder order) {
    const std::vector<Word> words = native::pack_words(bytes, order);
    return value(native::mac({j, k}, words));
  }
};

// --- Evaluation -----------------------------------------------------------

template <typename Core, typename Word>
void put_prelude_out(Outputs& out, const PreludeOutT<Word>& p) {
  out["X0"] = Core::value(p.x0);
  out["Y0"] = Core::value(p.y0);
  out["V0"] = Core::value(p.v0);
  out["W"] = Core::value(p.w);
  out["S"] = Core::value(p.s);
  out["T"] = Core::value(p.t);
}

template <typename Core>
Outputs evaluate(const VectorRecord& r, const RunOptions& options) {
  using Word = typename Core::Word;
  const auto in = [&](std::string_view k) { return Core::word(r.input(k)); };
  Outputs out;
  const std::string& op = r.op;

  if (op == "mul1") {
    out["r"] = Core::value(Core::mul1(in("a"), in("b")));
  } else if (op == "mul2") {
    out["r"] = Core::value(Core::mul2(in("a"), in("b")));
  } else if (op == "mul2a") {
    out["r"] = Core::value(Core::mul2a(in("a"), in("b")));
  } else if (op == "byt") {
    const auto [u, l] = Core::byt(in("a"), in("b"));
    out["u"] = Core::value(u);
    out["l"] = Core::value(l);
  } else if (op == "pat") {
    out["p"] = Core::value(Core::pat(in("a"), in("b")));
  } else if (op == "prelude_chain") {
    const auto p = Core::byte(r.input("p"));
    const auto t = Core::prelude_chain(in("j1"), in("k1"), p);
    const auto& d = t.detail;
    const std::pair<const char*, Word> blocks[] = {
        {"J12", d.j12}, {"J14", d.j14}, {"J16", d.j16}, {"J18", d.j18}, {"J22", d.j22},
        {"J24", d.j24}, {"J26", d.j26}, {"J28", d.j28}, {"K12", d.k12}, {"K14", d.k14},
        {"K15", d.k15}, {"K17", d.k17}, {"K19", d.k19}, {"K22", d.k22}, {"K24", d.k24},
        {"K25", d.k25}, {"K27", d.k27}, {"K29", d.k29}, {"H0", d.h0},   {"H4", d.h4},
        {"H5", d.h5},   {"H6", d.h6},   {"H7", d.h7},   {"H8", d.h8},   {"H9", d.h9}};
    for (const auto& [name, w] : blocks) out[name] = Core::value(w);
    out["Q"] = Core::value(Core::q(p));
    out["PAT45"] = Core::value(Core::pat(d.h4, d.h5));
    out["PAT67"] = Core::value(Core::pat(d.h6, d.h7));
    out["PAT89"] = Core::value(Core::pat(d.h8, d.h9));
    put_prelude_out<Core>(out, t.out);
  } else if (op == "prelude") {
    out["PAT"] = Core::value(Core::pat(in("j"), in("k")));
    put_prelude_out<Core>(out, Core::prelude_trace(in("j"), in("k")).out);
  } else if (op == "loop_trace") {
    const LoopConstantsT<Word> c{in("a"), in("b"), in("c"), in("d")};
    const auto t = Core::loop_trace({in("x0"), in("y0"), in("v")}, in("w"), in("m"), c);
    const std::pair<const char*, Word> fields[] = {
        {"Vp", t.vp}, {"E", t.e},     {"X", t.x},     {"Y", t.y},   {"F", t.f},
        {"G", t.g},   {"Fp", t.fp},   {"Gp", t.gp},   {"Fpp", t.fpp}, {"Gpp", t.gpp},
        {"Xp", t.xp}, {"Yp", t.yp},   {"Z", t.z}};
    for (const auto& [name, w] : fields) out[name] = Core::value(w);
  } else if (op == "mac2") {
    out["PAT"] = Core::value(Core::pat(in("j"), in("k")));
    const auto p = Core::prelude_trace(in("j"), in("k")).out;
    put_prelude_out<Core>(out, p);
    LoopStateT<Word> s{p.x0, p.y0, p.v0};
    const Word sequence[] = {in("m1"), in("m2"), p.s, p.t};
    const char* names[][2] = {{"X", "Y"}, {"Xp", "Yp"}, {"Xpp", "Ypp"}, {"Xppp", "Yppp"}};
    for (int i = 0; i < 4; ++i) {
      s = Core::main_loop(s, p.w, sequence[i]);
      out[names[i][0]] = Core::value(s.x);
      out[names[i][1]] = Core::value(s.y);
    }
    out["Z"] = Core::value(Word(s.x ^ s.y));
  } else if (op == "chain") {
    const auto p = Core::prelude_trace(in("j"), in("k")).out;
    const std::uint64_t n = r.input("n");
    LoopStateT<Word> s{p.x0, p.y0, p.v0};
    const auto record = [&](std::uint64_t i) {
      const std::string suffix = i == 1 ? "" : std::to_string(i - 1);
      out["X" + suffix] = Core::value(s.x);
      out["Y" + suffix] = Core::value(s.y);
    };
    for (std::uint64_t i = 1; i <= n; ++i) {
      s = Core::main_loop(s, p.w, in("m"));
      record(i);
    }
    out["Z"] = Core::value(Core::coda(s, p.w, p.s, p.t));
    s = Core::main_loop(s, p.w, p.s);
    record(n + 1);
    s = Core::main_loop(s, p.w, p.t);
    record(n + 2);
  } else if (op == "long") {
    const std::vector<Block> message =
        gen_message(Block::from_uint(static_cast<std::uint32_t>(r.input("init"))),
                    Block::from_uint(static_cast<std::uint32_t>(r.input("incr"))),
                    static_cast<std::size_t>(r.input("n")));
    const std::vector<std::uint8_t> bytes = unpack_blocks(message, ByteOrder::BigEndian);
    out["mac"] = Core::mac_bytes(in("j"), in("k"), bytes, options.byte_order);
  } else {
    throw std::invalid_argument("unknown op " + op);
  }
  return out;
}

// --- Schema ---------------------------------------------------------------

struct OpSchema {
  std::string_view op;
  std::vector<std::string_view> inputs;
};

const std::vector<OpSchema>& schemas() {
  static const std::vector<OpSchema> s = {
      {"mul1", {"a", "b"}},
      {"mul2", {"a", "b"}},
      {"mul2a", {"a", "b"}},
      {"byt", {"a", "b"}},
      {"pat", {"a", "b"}},
      {"prelude_chain", {"j1", "k1", "p"}},
      {"prelude", {"j", "k"}},
      {"loop_trace", {"a", "b", "c", "d", "v", "w", "x0", "y0", "m"}},
      {"mac2", {"j", "k", "m1", "m2"}},
      {"chain", {"j", "k", "m", "n"}},
      {"long", {"j", "k", "init", "incr", "n"}},
  };
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Field> parse_fields(std::string_view text, std::size_t line, std::size_t column) {
  std::vector<Field> fields;
  if (text.empty()) return fields;
  std::size_t offset = 0;
  for (std::string_view item : split(text, ',')) {
    const std::size_t col = column + offset;
    offset += item.size() + 1;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("expected key=value, got '" + std::string(item) + "'", line, col);
    }
    Field f;
    f.key = std::string(item.substr(0, eq));
    const std::string_view v = item.substr(eq + 1);
    if (f.key == "n") {
      f.digits = 0;
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), f.value);
      if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty()) {
        throw ParseError("field n needs a decimal count", line, col + eq + 1);
      }
    } else {
      if (v.size() != 2 && v.size() != 8) {
        throw ParseError("value of " + f.key + " must have 2 or 8 hex digits", line,
                         col + eq + 1);
      }
      f.digits = static_cast<unsigned>(v.size());
      try {
        f.value = parse_hex_digits(v, v.size());
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line, col + eq + e.column());
      }
    }
    for (const Field& seen : fields) {
      if (seen.key == f.key) throw ParseError("duplicate field " + f.key, line, col);
    }
    fields.push_back(std::move(f));
  }
  return fields;
}

// Output names an op can produce for this record, computed by running the
// native evaluator on the record's inputs.
std::set<std::string, std::less<>> producible(const VectorRecord& r) {
  std::set<std::string, std::less<>> names;
  if (r.op == "long") {
    names.insert("mac");
    return names;
  }
  for (const auto& [k, v] : evaluate<NativeAdaptor>(r, {})) names.insert(k);
  return names;
}

}  // namespace

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::T1: return "t1";
    case Suite::T2: return "t2";
    case Suite::T3: return "t3";
    case Suite::T4: return "t4";
    case Suite::AnnexE: return "annexe";
    case Suite::Long: return "long";
  }
  return "?";
}

std::string_view core_name(CoreKind core) { return core == CoreKind::Gate ? "gate" : "native"; }

Suite parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> parse_suite_selection(std::string_view name) {
  if (name == "all") return {kSuites.begin(), kSuites.end()};
  return {parse_suite(name)};
}

std::vector<CoreKind> parse_core_selection(std::string_view name) {
  if (name == "gate") return {CoreKind::Gate};
  if (name == "native") return {CoreKind::Native};
  if (name == "both") return {CoreKind::Gate, CoreKind::Native};
  throw ParseError("unknown core '" + std::string(name) + "'");
}

std::span<const Suite> all_suites() { return kSuites; }

std::optional<std::size_t> stated_check_count(Suite suite) {
  switch (suite) {
    case Suite::T1: return 36;
    case Suite::T2: return 56;
    case Suite::T3: return 64;
    case Suite::T4: return 45;
    case Suite::Long: return 4;
    case Suite::AnnexE: return std::nullopt;
  }
  return std::nullopt;
}

std::uint64_t VectorRecord::input(std::string_view key) const {
  for (const Field& f : inputs) {
    if (f.key == key) return f.value;
  }
  throw std::out_of_range("record " + name + " has no input " + std::string(key));
}

std::size_t Corpus::check_count(Suite suite) const {
  std::size_t n = 0;
  for (const VectorRecord& r : records) {
    if (r.suite == suite) n += r.outputs.size();
  }
  return n;
}

Corpus parse_corpus(std::string_view text) {
  Corpus corpus;
  std::set<std::string, std::less<>> names;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t pos = first;
    while (pos < line.size()) {
      const std::size_t end = std::min(line.find_first_of(" \t", pos), line.size());
      tokens.emplace_back(line.substr(pos, end - pos), pos + 1);
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    if (tokens.size() != 5) {
      throw ParseError("expected 5 tokens: suite name op in:... out:...", line_no, first + 1);
    }

    VectorRecord r;
    r.line = line_no;
    try {
      r.suite = parse_suite(tokens[0].first);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, tokens[0].second);
    }
    r.name = std::string(tokens[1].first);
    if (!names.insert(r.name).second) {
      throw ParseError("duplicate record name " + r.name, line_no, tokens[1].second);
    }
    r.op = std::string(tokens[2].first);
    const auto schema = std::find_if(schemas().begin(), schemas().end(),
                                     [&](const OpSchema& s) { return s.op == r.op; });
    if (schema == schemas().end()) {
      throw ParseError("unknown op " + r.op, line_no, tokens[2].second);
    }
    const auto [in_text, in_col] = tokens[3];
    const auto [out_text, out_col] = tokens[4];
    if (!in_text.starts_with("in:")) throw ParseError("expected in:", line_no, in_col);
    if (!out_text.starts_with("out:")) throw ParseError("expected out:", line_no, out_col);
    r.inputs = parse_fields(in_text.substr(3), line_no, in_col + 3);
    r.outputs = parse_fields(out_text.substr(4), line_no, out_col + 4);
    if (r.outputs.empty()) throw ParseError("record has no checks", line_no, out_col);

    for (std::string_view key : schema->inputs) {
      const bool present = std::any_of(r.inputs.begin(), r.inputs.end(),
                                       [&](const Field& f) { return f.key == key; });
      if (!present) {
        throw ParseError("op " + r.op + " needs input " + std::string(key), line_no, in_col);
      }
    }
    for (const Field& f : r.inputs) {
      if (std::find(schema->inputs.begin(), schema->inputs.end(), f.key) ==
          schema->inputs.end()) {
        throw ParseError("op " + r.op + " has no input " + f.key, line_no, in_col);
      }
    }
    if (r.op == "long" || r.op == "chain") {
      const std::uint64_t n = r.input("n");
      if (n == 0 || n >= kDefaultBlockLimit) {
        throw ParseError("block count out of range", line_no, in_col);
      }
    }
    const auto known = producible(r);
    for (const Field& f : r.outputs) {
      if (!known.contains(f.key)) {
        throw ParseError("op " + r.op + " does not produce " + f.key, line_no, out_col);
      }
    }
    corpus.records.push_back(std::move(r));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_corpus(text.str());
}

const Corpus& builtin_corpus() {
  static const Corpus corpus = parse_corpus(detail::kBuiltinCorpus);
  return corpus;
}

SuiteReport run_suite(const Corpus& corpus, Suite suite, CoreKind core, const RunOptions& options) {
  SuiteReport report;
  report.suite = suite;
  report.core = core;
  for (const VectorRecord& r : corpus.records) {
    if (r.suite != suite) continue;
    Outputs actual;
    std::string error;
    try {
      actual = core == CoreKind::Gate ? evaluate<GateAdaptor>(r, options)
                                      : evaluate<NativeAdaptor>(r, options);
    } catch (const std::exception& e) {
      error = std::string("error: ") + e.what();
    }
    for (const Field& expected : r.outputs) {
      ++report.total;
      const Value want{expected.value, expected.digits};
      const auto it = actual.find(expected.key);
      if (error.empty() && it != actual.end() && it->second.value == want.value) {
        ++report.passed;
        continue;
      }
      std::string got = !error.empty()       ? error
                        : it == actual.end() ? std::string("missing")
                                             : render({it->second.value, want.digits});
      report.failures.push_back({r.name + "." + expected.key, render(want), std::move(got)});
    }
  }
  return report;
}

std::vector<SuiteReport> run_suites(const Corpus& corpus, std::span<const Suite> suites,
                                    std::span<const CoreKind> cores, const RunOptions& options) {
  std::vector<SuiteReport> reports;
  for (Suite s : suites) {
    for (CoreKind c : cores) reports.push_back(run_suite(corpus, s, c, options));
  }
  return reports;
}

std::vector<Block> gen_message(const Block& init, const Block& incr, std::size_t count) {
  if (count == 0) throw std::invalid_argument("message needs at least one block");
  std::vector<Block> blocks;
  blocks.reserve(count);
  blocks.push_back(init);
  for (std::size_t i = 1; i < count; ++i) blocks.push_back(add_block(blocks.back(), incr));
  return blocks;
}

}  // namespace maa::kat
