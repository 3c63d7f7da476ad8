#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "loco/families.hpp"

namespace loco {

/// One grid column of a group of three adjacent down tracks: three binary
/// magnetization values (top, middle, bottom), or the unmagnetized no-write
/// column z.
class Column {
 public:
  static Column no_write() { return Column({-1, -1, -1}); }
  static Column from_bits(const std::array<int, 3>& bits);

  bool is_no_write() const { return bits_[0] < 0; }
  const std::array<int, 3>& bits() const;

  friend bool operator==(const Column&, const Column&) = default;

 private:
  explicit Column(const std::array<int, 3>& bits) : bits_(bits) {}
  std::array<int, 3> bits_;
};

/// 3 x n grid, one Column per grid column.
using Grid = std::vector<Column>;

/// Standard GF(8) symbol <-> column map: the 3-bit expansion of the level,
/// most significant bit on the top track. Bijective on written columns.
Column symbol_to_column(int gf8_level);
int column_to_symbol(const Column& column);

/// 2-to-1 GF(8) <-> GF(4) map: each GF(4) symbol has exactly two GF(8)
/// preimages; the selection bit picks the left (0) or right (1) one.
class SchemeMapping {
 public:
  static const SchemeMapping& ns();
  static const SchemeMapping& np();
  static const SchemeMapping& of(Family family);

  int mux(int gf4_level, int bit) const;
  std::pair<int, int> demux(int gf8_level) const;  // (gf4 level, selection bit)

 private:
  explicit SchemeMapping(const std::array<std::array<int, 2>, 4>& pairs);
  std::array<std::array<int, 2>, 4> pairs_;
  std::array<std::pair<int, int>, 8> inverse_;
};

/// Center column indices (middle row) whose 3x3 window is a square / plus
/// isolation pattern. Windows containing a no-write column are skipped.
std::vector<int> scan_sis(const Grid& grid);
std::vector<int> scan_pis(const Grid& grid);

/// Longest run of consecutive identical written columns; a no-write column
/// matches nothing and terminates runs on both sides.
int max_no_transition_run(const Grid& grid);

// -- streams ----------------------------------------------------------------

/// Input chunk size per frame: s for LoRll/SLoco/OsLoco/OpLoco, s+m+1 for
/// NsLoco (m symbol selections + 1 bridge selection), s+m for NpLoco.
std::size_t chunk_bits(const FamilyCodec& codec);

/// Encode a whole input (length a multiple of chunk_bits) into the written
/// symbol stream: per chunk a codeword, then its bridging symbol(s); the
/// stream ends with the last frame's bridge. NsLoco/NpLoco emit GF(8)
/// symbols through the scheme mapping.
SymbolStream assemble_symbols(const FamilyCodec& codec, const Bits& input);

struct ParsedFrame {
  FrameStatus status = FrameStatus::Ok;
  Bits bits;  // full chunk on Ok, empty otherwise
};

std::vector<ParsedFrame> parse_symbols(const FamilyCodec& codec, const SymbolStream& stream);

/// Grid forms of the above for the GF(8)-written families (OsLoco, OpLoco,
/// NsLoco, NpLoco).
Grid assemble_grid(const FamilyCodec& codec, const Bits& input);
std::vector<ParsedFrame> parse_grid(const FamilyCodec& codec, const Grid& grid);

Grid symbols_to_grid(const SymbolStream& stream);
SymbolStream grid_to_symbols(const Grid& grid);

/// Pattern scan over a stream; no-write symbols break every window.
bool stream_hits_forbidden(const SymbolStream& stream, const ForbiddenSet& forbidden);

/// Demap a written GF(8) stream to the GF(4) symbols it encodes (z passes
/// through) for constraint checks on scheme streams.
SymbolStream stream_to_gf4(const SchemeMapping& mapping, const SymbolStream& stream);

// -- text interchange formats -------------------------------------------------

/// Grid: 3 lines over {'+','-','z'}, column k at character k ('+' = bit 1).
std::string grid_to_text(const Grid& grid);
Grid grid_from_text(const std::string& text);

/// Symbol stream: one level character per symbol, 'z' for no-write.
/// '|' and whitespace are ignored on read.
std::string symbols_to_text(const SymbolStream& stream);
SymbolStream symbols_from_text(const std::string& text, const Alphabet& alphabet);

}  // namespace loco
