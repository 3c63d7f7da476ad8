#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loco/capacity.hpp"
#include "loco/config.hpp"
#include "loco/families.hpp"
#include "loco/indexing.hpp"
#include "loco/tdmr.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFrameError = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string family;
  int d = 1;
  int x = 1;
  std::vector<int> m;
  std::string config;
  std::string in;
  std::string out;
  std::string bits;
  std::string format = "symbols";
};

loco::FamilyCodec make_codec(const Options& opt, int m) {
  loco::Family f = loco::family_from_name(opt.family);
  int param = f == loco::Family::LoRll ? opt.d : opt.x;
  return loco::FamilyCodec::make(f, param, m);
}

int single_m(const Options& opt) {
  if (opt.m.size() != 1) throw std::invalid_argument("--m expects exactly one value here");
  return opt.m[0];
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + opt.out);
    out << text;
  }
}

loco::Bits bytes_to_bits(const std::string& bytes) {
  loco::Bits bits;
  bits.reserve(bytes.size() * 8);
  for (unsigned char byte : bytes) {
    for (int k = 7; k >= 0; --k) bits.push_back(static_cast<std::uint8_t>((byte >> k) & 1));
  }
  return bits;
}

std::string bits_to_bytes(const loco::Bits& bits) {
  if (bits.size() % 8 != 0) {
    throw std::invalid_argument("bit count is not a whole number of bytes");
  }
  std::string bytes(bits.size() / 8, '\0');
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) bytes[k / 8] = static_cast<char>(bytes[k / 8] | (1 << (7 - k % 8)));
  }
  return bytes;
}

loco::Bits gather_input_bits(const Options& opt) {
  if (!opt.bits.empty()) return loco::bits_from_string(opt.bits);
  if (!opt.in.empty()) return bytes_to_bits(read_file(opt.in));
  throw std::invalid_argument("either --in or --bits is required");
}

loco::SymbolStream read_stream(const Options& opt, const loco::FamilyCodec& codec) {
  std::string text = read_file(opt.in);
  if (opt.format == "grid") {
    return loco::grid_to_symbols(loco::grid_from_text(text));
  }
  int wire_q = codec.q() == 2 ? 2 : 8;
  return loco::symbols_from_text(text, loco::Alphabet(wire_q));
}

int cmd_capacity(const Options& opt) {
  if (!opt.config.empty()) {
    auto forbidden = loco::load_constraint_config(opt.config);
    for (const auto& w : forbidden.warnings()) std::cerr << "warning: " << w << '\n';
    auto cap = loco::capacity(loco::ConstraintAutomaton::build(forbidden));
    std::printf("C=%.4f Cn=%.4f\n", cap.bits_per_symbol, cap.normalized);
    return kExitOk;
  }
  auto codec = make_codec(opt, opt.m.empty() ? 5 : opt.m[0]);
  auto cap = loco::scheme_capacity(codec);
  std::printf("C=%.4f Cn=%.4f", cap.bits_per_symbol, cap.normalized);
  if (codec.is_scheme()) std::printf(" (constrained part C=%.4f)", cap.constrained_bits);
  std::printf("\n");
  return kExitOk;
}

int cmd_cardinality(const Options& opt) {
  int m = single_m(opt);
  if (!opt.config.empty()) {
    auto automaton = loco::ConstraintAutomaton::build(loco::load_constraint_config(opt.config));
    std::cout << loco::count_words(automaton, m) << '\n';
    return kExitOk;
  }
  std::cout << make_codec(opt, m).codeword_count() << '\n';
  return kExitOk;
}

int cmd_rate_table(const Options& opt) {
  std::printf("%-5s %-8s %-8s %s\n", "m", "R", "Rn", "adder");
  for (int m : opt.m) {
    auto rate = make_codec(opt, m).rate();
    std::printf("%-5d %-8.4f %-8.4f %d bits\n", m, rate.bits_per_symbol, rate.normalized,
                rate.adder_bits);
  }
  return kExitOk;
}

int cmd_enumerate(const Options& opt) {
  int m = single_m(opt);
  auto forbidden = !opt.config.empty()
                       ? loco::load_constraint_config(opt.config)
                       : make_codec(opt, m).forbidden();
  auto automaton = loco::ConstraintAutomaton::build(forbidden);
  for (const auto& word : loco::enumerate_words(automaton, m)) {
    std::cout << word.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_encode(const Options& opt) {
  auto codec = make_codec(opt, single_m(opt));
  auto input = gather_input_bits(opt);
  auto stream = loco::assemble_symbols(codec, input);
  if (opt.format == "grid") {
    write_output(opt, loco::grid_to_text(loco::symbols_to_grid(stream)));
  } else {
    write_output(opt, loco::symbols_to_text(stream));
  }
  return kExitOk;
}

int cmd_decode(const Options& opt) {
  auto codec = make_codec(opt, single_m(opt));
  auto frames = loco::parse_symbols(codec, read_stream(opt, codec));
  loco::Bits bits;
  int bad = 0;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    if (frames[k].status != loco::FrameStatus::Ok) {
      std::cerr << "frame " << k << ": " << loco::to_string(frames[k].status) << '\n';
      ++bad;
      continue;
    }
    bits.insert(bits.end(), frames[k].bits.begin(), frames[k].bits.end());
  }
  if (bad > 0) return kExitFrameError;
  if (opt.out.empty()) {
    std::cout << loco::bits_to_string(bits) << '\n';
  } else {
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + opt.out);
    out << bits_to_bytes(bits);
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  if (!opt.config.empty()) {
    auto forbidden = loco::load_constraint_config(opt.config);
    auto stream = loco::symbols_from_text(read_file(opt.in), forbidden.alphabet());
    bool hit = loco::stream_hits_forbidden(stream, forbidden);
    std::printf("symbols: %zu forbidden-pattern hit: %s\n", stream.size(), hit ? "yes" : "no");
    return hit ? kExitFrameError : kExitOk;
  }

  auto codec = make_codec(opt, single_m(opt));
  auto stream = read_stream(opt, codec);
  auto frames = loco::parse_symbols(codec, stream);
  int ok = 0;
  for (const auto& f : frames) ok += f.status == loco::FrameStatus::Ok ? 1 : 0;

  bool pattern_hit;
  if (codec.is_scheme()) {
    auto gf4 = loco::stream_to_gf4(loco::SchemeMapping::of(codec.family()), stream);
    pattern_hit = loco::stream_hits_forbidden(gf4, codec.forbidden());
  } else {
    pattern_hit = loco::stream_hits_forbidden(stream, codec.forbidden());
  }

  std::printf("frames: %zu ok: %d\n", frames.size(), ok);
  std::printf("forbidden-pattern hit: %s\n", pattern_hit ? "yes" : "no");
  bool scan_fail = pattern_hit;
  if (codec.q() != 2) {
    auto grid = loco::symbols_to_grid(stream);
    auto sis = loco::scan_sis(grid);
    auto pis = loco::scan_pis(grid);
    std::printf("sis windows: %zu pis windows: %zu\n", sis.size(), pis.size());
    std::printf("max no-transition run: %d (m=%d)\n", loco::max_no_transition_run(grid),
                codec.m());
    if (codec.family() == loco::Family::OsLoco || codec.family() == loco::Family::NsLoco) {
      scan_fail = scan_fail || !sis.empty();
    } else {
      scan_fail = scan_fail || !pis.empty();
    }
  }
  bool pass = !scan_fail && ok == static_cast<int>(frames.size());
  std::printf("verify: %s\n", pass ? "PASS" : "FAIL");
  return pass ? kExitOk : kExitFrameError;
}

int cmd_selftest() {
  struct Case {
    loco::Family family;
    int param;
    int max_m;
  };
  const std::vector<Case> cases = {
      {loco::Family::LoRll, 1, 10}, {loco::Family::LoRll, 2, 10}, {loco::Family::SLoco, 1, 10},
      {loco::Family::SLoco, 2, 10}, {loco::Family::NsLoco, 1, 6}, {loco::Family::NpLoco, 1, 6},
      {loco::Family::OsLoco, 1, 4}, {loco::Family::OpLoco, 1, 4},
  };
  bool all_ok = true;
  for (const auto& c : cases) {
    bool ok = true;
    std::string detail;
    try {
      for (int m = 1; m <= c.max_m && ok; ++m) {
        auto codec = loco::FamilyCodec::make(c.family, c.param, m);
        auto automaton = loco::ConstraintAutomaton::build(codec.forbidden());
        auto words = loco::enumerate_words(automaton, m);
        if (loco::BigInt(words.size()) != codec.codeword_count()) {
          ok = false;
          detail = "cardinality mismatch at m=" + std::to_string(m);
          break;
        }
        for (std::size_t k = 0; k < words.size(); ++k) {
          if (codec.index_of(words[k]) != k) {
            ok = false;
            detail = "index mismatch at m=" + std::to_string(m);
            break;
          }
        }
        loco::BigInt usable = codec.codeword_count() - codec.excluded_count();
        if (usable < 2) continue;
        int s = codec.message_length();
        if (s <= 12) {
          for (loco::BigInt v = 0; v < (loco::BigInt(1) << s); ++v) {
            auto message = loco::integer_to_bits(v, s);
            loco::Bits back;
            if (codec.decode(codec.encode(message), back) != loco::FrameStatus::Ok ||
                back != message) {
              ok = false;
              detail = "encode/decode mismatch at m=" + std::to_string(m);
              break;
            }
          }
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    std::string label = loco::family_name(c.family);
    if (c.family == loco::Family::LoRll) label += " d=" + std::to_string(c.param);
    if (c.family == loco::Family::SLoco) label += " x=" + std::to_string(c.param);
    std::printf("%-12s %s%s%s\n", label.c_str(), ok ? "PASS" : "FAIL", detail.empty() ? "" : ": ",
                detail.c_str());
    all_ok = all_ok && ok;
  }
  std::printf("%s\n", all_ok ? "all families PASS" : "selftest FAIL");
  return all_ok ? kExitOk : kExitFrameError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexicographically-indexed constrained codes"};
  app.require_subcommand(1);
  Options opt;

  auto add_family_opts = [&](CLI::App* cmd, bool allow_config) {
    cmd->add_option("--family", opt.family, "family: lorll, sloco, os, op, ns, np");
    cmd->add_option("--d", opt.d, "minimum 0-run separating 1s (lorll)");
    cmd->add_option("--x", opt.x, "minimum transition separation (sloco)");
    if (allow_config) {
      cmd->add_option("--config", opt.config, "constraint config JSON");
    }
  };
  auto add_m = [&](CLI::App* cmd) {
    cmd->add_option("--m", opt.m, "block length(s)")->delimiter(',');
  };

  auto* capacity = app.add_subcommand("capacity", "constraint / scheme capacity");
  add_family_opts(capacity, true);
  add_m(capacity);

  auto* cardinality = app.add_subcommand("cardinality", "exact codeword count");
  add_family_opts(cardinality, true);
  add_m(cardinality);

  auto* rate_table = app.add_subcommand("rate-table", "rates, normalized rates, adder sizes");
  add_family_opts(rate_table, false);
  add_m(rate_table);

  auto* enumerate = app.add_subcommand("enumerate", "list all codewords (small m)");
  add_family_opts(enumerate, true);
  add_m(enumerate);

  auto* encode = app.add_subcommand("encode", "encode messages into a bridged stream");
  add_family_opts(encode, false);
  add_m(encode);
  encode->add_option("--in", opt.in, "message file (raw bytes, MSB first)");
  encode->add_option("--bits", opt.bits, "literal message bits");
  encode->add_option("--out", opt.out, "output file");
  encode->add_option("--format", opt.format, "symbols | grid");

  auto* decode = app.add_subcommand("decode", "decode a stream back to messages");
  add_family_opts(decode, false);
  add_m(decode);
  decode->add_option("--in", opt.in, "stream file")->required();
  decode->add_option("--out", opt.out, "output file (raw bytes)");
  decode->add_option("--format", opt.format, "symbols | grid");

  auto* verify = app.add_subcommand("verify", "validate a stream");
  add_family_opts(verify, true);
  add_m(verify);
  verify->add_option("--in", opt.in, "stream file")->required();
  verify->add_option("--format", opt.format, "symbols | grid");

  app.add_subcommand("selftest", "closed-form codecs vs the generic engine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (capacity->parsed()) return cmd_capacity(opt);
    if (cardinality->parsed()) return cmd_cardinality(opt);
    if (rate_table->parsed()) return cmd_rate_table(opt);
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (encode->parsed()) return cmd_encode(opt);
    if (decode->parsed()) return cmd_decode(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return cmd_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFrameError;
  }
}
