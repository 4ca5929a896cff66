/** pdw: command-line surface for the period-doubling word library.
 *
 * Subcommands: gen, env, classify, spectrum, verify. JSON output is stable
 * (fixed key order, no timestamps); elapsed time goes to stderr only.
 * Exit codes: 0 success, 1 verification failure, 2 not a factor, 64 usage.
 */

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdw/pdw.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitNotAFactor = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string format = "text";
  std::string seq = "D";
  std::string word;
  std::string range = "1..1";
  std::string suite = "all";
  std::string golden_dir;
  std::size_t len = 0;
  std::size_t tokens = 256;
  pdw::verify::Limits limits;
};

void emit(const ordered_json& payload, const std::string& format) {
  if (format == "json") {
    std::cout << payload.dump() << '\n';
  }
}

/** Parses "A..B" or a single "N" (meaning N..N); 1-based, A <= B. */
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  std::size_t from = 0, to = 0;
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      from = to = std::stoull(text);
    } else {
      from = std::stoull(text.substr(0, dots));
      to = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw pdw::InvalidIndex("--p expects N or A..B, got '" + text + "'");
  }
  if (from < 1 || to < from) {
    throw pdw::InvalidIndex("--p range must satisfy 1 <= A <= B, got '" +
                            text + "'");
  }
  return {from, to};
}

int cmd_gen(const Options& opt) {
  pdw::SequenceId s = pdw::parse_sequence(opt.seq);
  pdw::Word text = pdw::prefix(s, opt.len);
  if (opt.format == "text") {
    std::cout << text << '\n';
  } else {
    emit({{"command", "gen"},
          {"seq", pdw::to_string(s)},
          {"len", opt.len},
          {"text", text}},
         opt.format);
  }
  return kExitOk;
}

int cmd_env(const Options& opt) {
  pdw::SequenceId s = pdw::parse_sequence(opt.seq);
  pdw::EnvelopeFit fit = pdw::envelope_of(s, opt.word);
  pdw::Word env = pdw::envelope_word(fit.env);
  if (opt.format == "text") {
    std::cout << "type=" << fit.env.type << " m=" << fit.env.index
              << " offset=" << fit.offset << " envelope=" << env << '\n';
  } else {
    emit({{"command", "env"},
          {"seq", pdw::to_string(s)},
          {"word", opt.word},
          {"type", fit.env.type},
          {"m", fit.env.index},
          {"offset", fit.offset},
          {"envelope", env}},
         opt.format);
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  pdw::SequenceId s = pdw::parse_sequence(opt.seq);
  pdw::ReturnClassification c = pdw::classify(s, opt.word, opt.tokens);
  if (opt.format == "text") {
    std::cout << "kind=" << pdw::to_string(c.kind) << " r0=" << c.r0;
    for (const auto& [letter, image] : c.alphabet) {
      std::cout << ' ' << letter << '=' << image;
    }
    std::cout << " verified_tokens=" << c.verified_tokens << '\n';
  } else {
    ordered_json alphabet;
    for (const auto& [letter, image] : c.alphabet) {
      alphabet[std::string(1, letter)] = image;
    }
    emit({{"command", "classify"},
          {"seq", pdw::to_string(s)},
          {"word", opt.word},
          {"kind", pdw::to_string(c.kind)},
          {"alphabet", alphabet},
          {"r0", c.r0},
          {"verified_tokens", c.verified_tokens}},
         opt.format);
  }
  return kExitOk;
}

int cmd_spectrum(const Options& opt) {
  auto [p_from, p_to] = parse_range(opt.range);
  std::vector<pdw::SpectrumVerdict> verdicts =
      pdw::relations_closed(opt.word, p_from, p_to);
  if (opt.format == "text") {
    for (const pdw::SpectrumVerdict& v : verdicts) {
      std::cout << "p=" << v.p << " relation=" << pdw::to_string(v.relation)
                << " letter=" << v.theta_letter
                << " source=" << pdw::to_string(v.source) << '\n';
    }
  } else {
    ordered_json list = ordered_json::array();
    for (const pdw::SpectrumVerdict& v : verdicts) {
      list.push_back({{"p", v.p},
                      {"relation", pdw::to_string(v.relation)},
                      {"theta_letter", std::string(1, v.theta_letter)},
                      {"source", pdw::to_string(v.source)}});
    }
    emit({{"command", "spectrum"}, {"word", opt.word}, {"verdicts", list}},
         opt.format);
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<pdw::verify::CheckResult> checks =
      pdw::verify::run_suite(opt.suite, opt.limits);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();

  std::size_t failed = 0;
  for (const pdw::verify::CheckResult& c : checks) {
    if (c.status == pdw::verify::Status::Fail) ++failed;
  }
  if (opt.format == "text") {
    for (const pdw::verify::CheckResult& c : checks) {
      std::cout << pdw::verify::to_string(c.status) << "  " << c.name << ": "
                << c.detail << '\n';
    }
    std::cout << checks.size() << " checks, " << (checks.size() - failed)
              << " passed, " << failed << " failed" << '\n';
  } else {
    ordered_json list = ordered_json::array();
    for (const pdw::verify::CheckResult& c : checks) {
      list.push_back({{"name", c.name},
                      {"status", pdw::verify::to_string(c.status)},
                      {"detail", c.detail}});
    }
    emit({{"command", "verify"},
          {"suite", opt.suite},
          {"checks", list},
          {"passed", checks.size() - failed},
          {"failed", failed}},
         opt.format);
  }
  std::cerr << "elapsed: " << elapsed << " s\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// Golden fixture emission.
// ---------------------------------------------------------------------------

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pdw::Error("cannot write " + path.string());
  out << body;
}

std::string golden_blocks() {
  std::string body = "m\tA_m\tB_m\n";
  for (int m = 0; m <= 4; ++m) {
    body += std::to_string(m) + '\t' + pdw::block(pdw::BlockKind::A, m) +
            '\t' + pdw::block(pdw::BlockKind::B, m) + '\n';
  }
  return body;
}

std::string golden_envelopes(pdw::SequenceId s) {
  std::string body = "m\ttype1\ttype2\n";
  for (int m = 1; m <= 4; ++m) {
    body += std::to_string(m) + '\t' + pdw::envelope_word({s, 1, m}) + '\t' +
            pdw::envelope_word({s, 2, m}) + '\n';
  }
  return body;
}

std::string golden_envelope_returns(int type) {
  std::string body = "m\tr0\tr1\tr2\tr4\n";
  for (int m = 1; m <= 4; ++m) {
    pdw::EnvelopeReturnWords r =
        pdw::envelope_return_words({pdw::SequenceId::D, type, m});
    body += std::to_string(m) + '\t' + r.r0 + '\t' + r.r1 + '\t' + r.r2 +
            '\t' + (r.r4 ? *r.r4 : pdw::Word("--")) + '\n';
  }
  return body;
}

std::string golden_classification_examples() {
  struct Row {
    pdw::SequenceId seq;
    pdw::Word word;
  };
  const Row rows[] = {
      {pdw::SequenceId::D, "a"},        {pdw::SequenceId::D, "aa"},
      {pdw::SequenceId::Theta1, "a"},   {pdw::SequenceId::Theta1, "aa"},
      {pdw::SequenceId::Theta2, "aba"}, {pdw::SequenceId::Theta2, "ababa"},
  };
  std::string body = "seq\tword\tkind\tr0\ta\tb\tc\n";
  for (const Row& row : rows) {
    pdw::ReturnClassification c = pdw::classify(row.seq, row.word, 16);
    body += pdw::to_string(row.seq) + '\t' + row.word + '\t' +
            pdw::to_string(c.kind) + '\t' + c.r0 + '\t' + c.alphabet.at('a') +
            '\t' + c.alphabet.at('b') + '\t' +
            (c.alphabet.count('c') ? c.alphabet.at('c') : pdw::Word("--")) +
            '\n';
  }
  return body;
}

std::string golden_squares(std::size_t horizon) {
  std::string body = "root\tposition\n";
  for (const auto& [w, q] : pdw::squares(horizon)) {
    body += w + '\t' + std::to_string(q) + '\n';
  }
  return body;
}

int emit_golden(const std::string& dir) {
  const std::filesystem::path base(dir);
  std::filesystem::create_directories(base);
  write_file(base / "blocks.tsv", golden_blocks());
  write_file(base / "envelopes_d.tsv", golden_envelopes(pdw::SequenceId::D));
  write_file(base / "envelopes_theta1.tsv",
             golden_envelopes(pdw::SequenceId::Theta1));
  write_file(base / "envelopes_theta2.tsv",
             golden_envelopes(pdw::SequenceId::Theta2));
  write_file(base / "envelope_returns_type1.tsv", golden_envelope_returns(1));
  write_file(base / "envelope_returns_type2.tsv", golden_envelope_returns(2));
  write_file(base / "classification_examples.tsv",
             golden_classification_examples());
  write_file(base / "squares_4096.tsv", golden_squares(4096));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"period-doubling word toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--golden", opt.golden_dir,
                 "write golden fixture files to this directory and exit");

  CLI::App* gen = app.add_subcommand("gen", "print a sequence prefix");
  gen->add_option("--seq", opt.seq, "sequence tag: D, T1, T2")
      ->capture_default_str();
  gen->add_option("--len", opt.len, "prefix length")->required();

  CLI::App* env = app.add_subcommand("env", "locate the envelope of a factor");
  env->add_option("--seq", opt.seq, "sequence tag")->capture_default_str();
  env->add_option("--word", opt.word, "factor over a/b/c")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "return-word classification of a factor");
  classify->add_option("--seq", opt.seq, "sequence tag")->capture_default_str();
  classify->add_option("--word", opt.word, "factor over a/b/c")->required();
  classify->add_option("--tokens", opt.tokens, "tokens to verify")
      ->capture_default_str();

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "occurrence relations of a factor of the base sequence");
  spectrum->add_option("--word", opt.word, "factor over a/b")->required();
  spectrum->add_option("--p", opt.range, "occurrence index or range A..B")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", opt.suite, "suite name")
      ->check(CLI::IsMember(pdw::verify::suite_names()))
      ->capture_default_str();
  int max_m = -1;
  std::size_t max_len = 0, tokens = 0, horizon = 0;
  verify->add_option("--max-m", max_m, "cap on envelope index m");
  verify->add_option("--max-len", max_len, "cap on factor length");
  verify->add_option("--tokens", tokens, "tokens per classification");
  verify->add_option("--horizon", horizon, "prefix length to scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!opt.golden_dir.empty()) return emit_golden(opt.golden_dir);
    if (gen->parsed()) return cmd_gen(opt);
    if (env->parsed()) return cmd_env(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (verify->parsed()) {
      if (max_m >= 0) opt.limits.max_m = max_m;
      if (max_len > 0) opt.limits.max_len = max_len;
      if (tokens > 0) opt.limits.tokens = tokens;
      if (horizon > 0) opt.limits.horizon = horizon;
      return cmd_verify(opt);
    }
    std::cerr << app.help();
    return kExitUsage;
  } catch (const pdw::NotAFactor& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotAFactor;
  } catch (const pdw::InvalidIndex& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pdw::MalformedWord& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pdw::UnknownLetter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
