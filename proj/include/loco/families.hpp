#pragma once

#include <string>
#include <vector>

#include "loco/alphabet.hpp"
#include "loco/bignum.hpp"
#include "loco/capacity.hpp"
#include "loco/constraint.hpp"

namespace loco {

/// The six closed-form code families.
///   LoRll  (q=2): runs of 1s separated by at least d 0s
///   SLoco  (q=2): at least x steps between level transitions
///   OsLoco (q=8): square-isolation columns {0 a 0, a6 a4 a6} forbidden
///   OpLoco (q=8): the 32 plus-isolation column patterns forbidden
///   NsLoco (q=4): GF(4) reduction of the square constraint, {a2 0 a2}
///   NpLoco (q=4): GF(4) reduction of the plus constraint, 8 patterns
enum class Family { LoRll, SLoco, OsLoco, OpLoco, NsLoco, NpLoco };

Family family_from_name(const std::string& name);  // lorll/sloco/os/op/ns/np
std::string family_name(Family family);

/// One written stream position: a symbol level or the no-write column z.
class StreamSymbol {
 public:
  static StreamSymbol no_write() { return StreamSymbol(-1); }
  static StreamSymbol symbol(int level);

  bool is_no_write() const { return level_ < 0; }
  int level() const;

  friend bool operator==(const StreamSymbol&, const StreamSymbol&) = default;

 private:
  explicit StreamSymbol(int level) : level_(level) {}
  int level_;
};

using SymbolStream = std::vector<StreamSymbol>;

enum class FrameStatus { Ok, ConstraintViolation, IndexOverflow };
std::string to_string(FrameStatus status);

/// Closed-form codec for one family at block length m: exact cardinality
/// table, per-symbol index rule, greedy message encoder, bridging policy and
/// clocking exclusions. All tables are built at construction and immutable
/// afterwards; encode/decode of independent frames may run concurrently.
class FamilyCodec {
 public:
  /// `param` is d for LoRll, x for SLoco (>= 1), ignored otherwise.
  static FamilyCodec make(Family family, int param, int m);
  static FamilyCodec make(Family family, int m) { return make(family, 1, m); }

  Family family() const { return family_; }
  int param() const { return param_; }
  int m() const { return m_; }
  int q() const { return alphabet_.q; }
  const Alphabet& alphabet() const { return alphabet_; }
  const ForbiddenSet& forbidden() const { return forbidden_; }

  // -- cardinalities -------------------------------------------------------
  int smallest_defined_index() const { return smallest_; }
  /// Exact N(i), defined for smallest_defined_index() <= i <= m()+1.
  /// Fractional only at the defined boundary indices below 1.
  const BigRat& cardinality(int i) const;
  BigInt codeword_count() const { return to_integer(cardinality(m_)); }

  // -- message mapping -----------------------------------------------------
  /// s = floor(log2(N(m) - r)) with r codewords removed for self-clocking.
  int message_length() const;
  int excluded_count() const { return excluded_; }
  int index_offset() const { return offset_; }
  std::vector<Word> excluded_codewords() const;

  bool satisfies(const Word& codeword) const;
  /// Lexicographic index by the family rule; per-symbol contributions are
  /// exact rationals asserted integral and non-negative. Throws if the word
  /// hits the forbidden set.
  BigInt index_of(const Word& codeword) const;
  Word encode(const Bits& message) const;
  FrameStatus decode(const Word& codeword, Bits& message_out) const;

  // -- bridging ------------------------------------------------------------
  int bridge_length() const;
  /// Bridging symbols for a boundary: `tail` = up to two trailing levels of
  /// the previous codeword, `head` = up to two leading levels of the next
  /// (stream order; empty head = end of stream). The returned symbols never
  /// let a forbidden pattern straddle the boundary.
  SymbolStream bridge(const std::vector<int>& tail, const std::vector<int>& head) const;

  // -- rates ---------------------------------------------------------------
  struct RateInfo {
    double bits_per_symbol = 0.0;
    double normalized = 0.0;
    int adder_bits = 0;  // s
  };
  /// Code rate; for NsLoco/NpLoco this is the scheme rate including the
  /// unconstrained selection bits.
  RateInfo rate() const;

  bool is_gf8() const { return family_ == Family::OsLoco || family_ == Family::OpLoco; }
  /// Families written through the GF(8)<->GF(4) selection-bit multiplex.
  bool is_scheme() const { return family_ == Family::NsLoco || family_ == Family::NpLoco; }

 private:
  FamilyCodec(Family family, int param, int m);

  int context_class(const std::vector<int>& msb_levels, int i) const;
  BigRat raw_contribution(int cls, int i, int a) const;
  const BigInt& contribution(int cls, int i, int a) const;

  Family family_;
  int param_;
  int m_;
  Alphabet alphabet_;
  ForbiddenSet forbidden_;
  int smallest_;   // smallest defined cardinality index
  int excluded_;   // codewords removed for self-clocking
  int offset_;     // message index offset after removal
  int s_ = -1;     // message length; -1 when N - r < 2
  int classes_;
  std::vector<BigRat> cards_;    // N(smallest_ + k), k = 0 .. m+1-smallest_
  std::vector<BigInt> contrib_;  // [i][class][a-1], flattened
};

/// Capacity of the family constraint plus the scheme adjustment: NsLoco and
/// NpLoco carry one unconstrained selection bit per written column, and TDMR
/// families normalize by 3 bits per column.
struct SchemeCapacity {
  double bits_per_symbol = 0.0;
  double normalized = 0.0;
  double constrained_bits = 0.0;
};
SchemeCapacity scheme_capacity(const FamilyCodec& codec, double tol = 1e-10);

}  // namespace loco
