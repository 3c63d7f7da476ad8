#include <algorithm>
#include "loco/tdmr.hpp"

#include <sstream>
#include <stdexcept>

namespace loco {

Column Column::from_bits(const std::array<int, 3>& bits) {
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("column bits must be 0 or 1");
  }
  return Column(bits);
}

const std::array<int, 3>& Column::bits() const {
  if (is_no_write()) throw std::logic_error("no-write column has no bits");
  return bits_;
}

Column symbol_to_column(int gf8_level) {
  if (gf8_level < 0 || gf8_level > 7) throw std::invalid_argument("GF(8) level out of range");
  return Column::from_bits({(gf8_level >> 2) & 1, (gf8_level >> 1) & 1, gf8_level & 1});
}

int column_to_symbol(const Column& column) {
  const auto& b = column.bits();
  return (b[0] << 2) | (b[1] << 1) | b[2];
}

SchemeMapping::SchemeMapping(const std::array<std::array<int, 2>, 4>& pairs) : pairs_(pairs) {
  for (int l4 = 0; l4 < 4; ++l4) {
    for (int bit = 0; bit < 2; ++bit) {
      inverse_[static_cast<std::size_t>(pairs_[static_cast<std::size_t>(l4)][static_cast<std::size_t>(bit)])] = {l4, bit};
    }
  }
}

const SchemeMapping& SchemeMapping::ns() {
  // {psi, psi^4} <-> 0, {1, psi^5} <-> 1, {psi^2, psi^3} <-> a, {0, psi^6} <-> a2
  static const SchemeMapping map({{{2, 5}, {1, 6}, {3, 4}, {0, 7}}});
  return map;
}

const SchemeMapping& SchemeMapping::np() {
  // {psi^3, psi^4} <-> 0, {0, 1} <-> 1, {psi^5, psi^6} <-> a, {psi, psi^2} <-> a2
  static const SchemeMapping map({{{4, 5}, {0, 1}, {6, 7}, {2, 3}}});
  return map;
}

const SchemeMapping& SchemeMapping::of(Family family) {
  if (family == Family::NsLoco) return ns();
  if (family == Family::NpLoco) return np();
  throw std::invalid_argument("no GF(8)<->GF(4) mapping for this family");
}

int SchemeMapping::mux(int gf4_level, int bit) const {
  if (gf4_level < 0 || gf4_level > 3) throw std::invalid_argument("GF(4) level out of range");
  if (bit != 0 && bit != 1) throw std::invalid_argument("selection bit must be 0 or 1");
  return pairs_[static_cast<std::size_t>(gf4_level)][static_cast<std::size_t>(bit)];
}

std::pair<int, int> SchemeMapping::demux(int gf8_level) const {
  if (gf8_level < 0 || gf8_level > 7) throw std::invalid_argument("GF(8) level out of range");
  return inverse_[static_cast<std::size_t>(gf8_level)];
}

namespace {

// Window check on three written columns, middle row center.
bool window_isolated(const Grid& g, int k, bool corners_too) {
  const auto& left = g[static_cast<std::size_t>(k - 1)];
  const auto& mid = g[static_cast<std::size_t>(k)];
  const auto& right = g[static_cast<std::size_t>(k + 1)];
  if (left.is_no_write() || mid.is_no_write() || right.is_no_write()) return false;
  const int center = mid.bits()[1];
  const int want = 1 - center;
  bool plus = mid.bits()[0] == want && mid.bits()[2] == want && left.bits()[1] == want &&
              right.bits()[1] == want;
  if (!corners_too) return plus;
  return plus && left.bits()[0] == want && left.bits()[2] == want && right.bits()[0] == want &&
         right.bits()[2] == want;
}

}  // namespace

std::vector<int> scan_sis(const Grid& grid) {
  std::vector<int> hits;
  for (int k = 1; k + 1 < static_cast<int>(grid.size()); ++k) {
    if (window_isolated(grid, k, true)) hits.push_back(k);
  }
  return hits;
}

std::vector<int> scan_pis(const Grid& grid) {
  std::vector<int> hits;
  for (int k = 1; k + 1 < static_cast<int>(grid.size()); ++k) {
    if (window_isolated(grid, k, false)) hits.push_back(k);
  }
  return hits;
}

int max_no_transition_run(const Grid& grid) {
  int best = 0;
  int run = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (grid[k].is_no_write()) {
      run = 0;
    } else if (run > 0 && grid[k] == grid[k - 1]) {
      ++run;
    } else {
      run = 1;
    }
    best = std::max(best, run);
  }
  return best;
}

std::size_t chunk_bits(const FamilyCodec& codec) {
  const std::size_t s = static_cast<std::size_t>(codec.message_length());
  switch (codec.family()) {
    case Family::NsLoco:
      return s + static_cast<std::size_t>(codec.m()) + 1;
    case Family::NpLoco:
      return s + static_cast<std::size_t>(codec.m());
    default:
      return s;
  }
}

SymbolStream assemble_symbols(const FamilyCodec& codec, const Bits& input) {
  const std::size_t chunk = chunk_bits(codec);
  if (input.size() % chunk != 0) {
    throw std::invalid_argument("input length must be a multiple of the chunk size");
  }
  const std::size_t frames = input.size() / chunk;
  const std::size_t s = static_cast<std::size_t>(codec.message_length());
  const int m = codec.m();

  std::vector<Word> words;
  words.reserve(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    Bits message(input.begin() + static_cast<std::ptrdiff_t>(f * chunk),
                 input.begin() + static_cast<std::ptrdiff_t>(f * chunk + s));
    words.push_back(codec.encode(message));
  }

  SymbolStream stream;
  stream.reserve(frames * static_cast<std::size_t>(m + codec.bridge_length()));
  for (std::size_t f = 0; f < frames; ++f) {
    const auto& levels = words[f].levels();
    const std::size_t base = f * chunk + s;
    if (codec.is_scheme()) {
      const auto& map = SchemeMapping::of(codec.family());
      for (int k = 0; k < m; ++k) {
        stream.push_back(StreamSymbol::symbol(
            map.mux(levels[static_cast<std::size_t>(k)], input[base + static_cast<std::size_t>(k)])));
      }
    } else {
      for (int v : levels) stream.push_back(StreamSymbol::symbol(v));
    }

    std::vector<int> tail(levels.end() - std::min<std::ptrdiff_t>(2, m), levels.end());
    std::vector<int> head;
    if (f + 1 < frames) {
      const auto& nxt = words[f + 1].levels();
      head.assign(nxt.begin(), nxt.begin() + std::min<std::ptrdiff_t>(2, m));
    }
    SymbolStream bridge = codec.bridge(tail, head);
    if (codec.family() == Family::NsLoco) {
      // the bridging column carries the chunk's final selection bit
      const auto& map = SchemeMapping::of(codec.family());
      stream.push_back(StreamSymbol::symbol(
          map.mux(bridge[0].level(), input[base + static_cast<std::size_t>(m)])));
    } else if (codec.family() == Family::NpLoco) {
      // no selection bit: the left preimage is written
      if (bridge[0].is_no_write()) {
        stream.push_back(bridge[0]);
      } else {
        stream.push_back(StreamSymbol::symbol(SchemeMapping::np().mux(bridge[0].level(), 0)));
      }
    } else {
      stream.insert(stream.end(), bridge.begin(), bridge.end());
    }
  }
  return stream;
}

std::vector<ParsedFrame> parse_symbols(const FamilyCodec& codec, const SymbolStream& stream) {
  const int m = codec.m();
  const std::size_t frame_len = static_cast<std::size_t>(m + codec.bridge_length());
  if (stream.size() % frame_len != 0) {
    throw std::invalid_argument("stream length must be a multiple of m plus the bridging length");
  }
  const std::size_t frames = stream.size() / frame_len;
  const int s = codec.message_length();

  std::vector<ParsedFrame> out(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    ParsedFrame& frame = out[f];
    const std::size_t base = f * frame_len;

    std::vector<int> levels(static_cast<std::size_t>(m));
    Bits selection(static_cast<std::size_t>(m));
    bool well_formed = true;
    for (int k = 0; k < m && well_formed; ++k) {
      const StreamSymbol& sym = stream[base + static_cast<std::size_t>(k)];
      if (sym.is_no_write()) {
        well_formed = false;  // no-write inside a codeword
        break;
      }
      if (codec.is_scheme()) {
        if (sym.level() > 7) {
          well_formed = false;
          break;
        }
        auto [l4, bit] = SchemeMapping::of(codec.family()).demux(sym.level());
        levels[static_cast<std::size_t>(k)] = l4;
        selection[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(bit);
      } else {
        if (sym.level() >= codec.q()) {
          well_formed = false;
          break;
        }
        levels[static_cast<std::size_t>(k)] = sym.level();
      }
    }

    std::uint8_t bridge_bit = 0;
    if (well_formed && codec.family() == Family::NsLoco) {
      const StreamSymbol& b = stream[base + static_cast<std::size_t>(m)];
      if (b.is_no_write() || b.level() > 7) {
        well_formed = false;
      } else {
        bridge_bit = static_cast<std::uint8_t>(SchemeMapping::ns().demux(b.level()).second);
      }
    }
    if (!well_formed) {
      frame.status = FrameStatus::ConstraintViolation;
      continue;
    }

    Bits message;
    frame.status = codec.decode(Word(codec.alphabet(), levels), message);
    if (frame.status != FrameStatus::Ok) continue;

    frame.bits = std::move(message);
    if (codec.is_scheme()) {
      frame.bits.insert(frame.bits.end(), selection.begin(), selection.end());
      if (codec.family() == Family::NsLoco) frame.bits.push_back(bridge_bit);
    }
  }
  return out;
}

Grid symbols_to_grid(const SymbolStream& stream) {
  Grid grid;
  grid.reserve(stream.size());
  for (const auto& sym : stream) {
    grid.push_back(sym.is_no_write() ? Column::no_write() : symbol_to_column(sym.level()));
  }
  return grid;
}

SymbolStream grid_to_symbols(const Grid& grid) {
  SymbolStream stream;
  stream.reserve(grid.size());
  for (const auto& col : grid) {
    stream.push_back(col.is_no_write() ? StreamSymbol::no_write()
                                       : StreamSymbol::symbol(column_to_symbol(col)));
  }
  return stream;
}

Grid assemble_grid(const FamilyCodec& codec, const Bits& input) {
  if (codec.q() == 2) throw std::invalid_argument("binary families have no grid form");
  return symbols_to_grid(assemble_symbols(codec, input));
}

std::vector<ParsedFrame> parse_grid(const FamilyCodec& codec, const Grid& grid) {
  if (codec.q() == 2) throw std::invalid_argument("binary families have no grid form");
  return parse_symbols(codec, grid_to_symbols(grid));
}

bool stream_hits_forbidden(const SymbolStream& stream, const ForbiddenSet& forbidden) {
  std::vector<int> segment;
  for (const auto& sym : stream) {
    if (sym.is_no_write()) {
      if (forbidden.hits(segment)) return true;
      segment.clear();
    } else {
      segment.push_back(sym.level());
    }
  }
  return forbidden.hits(segment);
}

SymbolStream stream_to_gf4(const SchemeMapping& mapping, const SymbolStream& stream) {
  SymbolStream out;
  out.reserve(stream.size());
  for (const auto& sym : stream) {
    out.push_back(sym.is_no_write() ? StreamSymbol::no_write()
                                    : StreamSymbol::symbol(mapping.demux(sym.level()).first));
  }
  return out;
}

std::string grid_to_text(const Grid& grid) {
  std::string out;
  out.reserve((grid.size() + 1) * 3);
  for (int row = 0; row < 3; ++row) {
    for (const auto& col : grid) {
      if (col.is_no_write()) {
        out.push_back('z');
      } else {
        out.push_back(col.bits()[static_cast<std::size_t>(row)] ? '+' : '-');
      }
    }
    out.push_back('\n');
  }
  return out;
}

Grid grid_from_text(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.size() != 3) throw std::invalid_argument("grid text must have exactly 3 rows");
  if (rows[1].size() != rows[0].size() || rows[2].size() != rows[0].size()) {
    throw std::invalid_argument("grid rows must have equal length");
  }
  Grid grid;
  grid.reserve(rows[0].size());
  for (std::size_t k = 0; k < rows[0].size(); ++k) {
    int z_count = 0;
    std::array<int, 3> bits{};
    for (std::size_t row = 0; row < 3; ++row) {
      char c = rows[row][k];
      if (c == 'z') {
        ++z_count;
      } else if (c == '+') {
        bits[row] = 1;
      } else if (c == '-') {
        bits[row] = 0;
      } else {
        throw std::invalid_argument(std::string("invalid grid character '") + c + "'");
      }
    }
    if (z_count == 3) {
      grid.push_back(Column::no_write());
    } else if (z_count == 0) {
      grid.push_back(Column::from_bits(bits));
    } else {
      throw std::invalid_argument("a column must be fully written or fully no-write");
    }
  }
  return grid;
}

std::string symbols_to_text(const SymbolStream& stream) {
  std::string out;
  out.reserve(stream.size());
  for (const auto& sym : stream) {
    out.push_back(sym.is_no_write() ? 'z' : symbol_char(sym.level()));
  }
  return out;
}

SymbolStream symbols_from_text(const std::string& text, const Alphabet& alphabet) {
  SymbolStream out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '|' || c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (c == 'z') {
      out.push_back(StreamSymbol::no_write());
    } else {
      out.push_back(StreamSymbol::symbol(level_from_char(c, alphabet)));
    }
  }
  return out;
}

}  // namespace loco
