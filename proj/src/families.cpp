#include "loco/families.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace loco {
namespace {

// OP-LOCO flank sets, as levels: A = {0,1,a3,a4}, B = {a,a2,a5,a6}.
bool op_in_a(std::optional<int> v) { return v == 0 || v == 1 || v == 4 || v == 5; }
bool op_in_b(std::optional<int> v) { return v == 2 || v == 3 || v == 6 || v == 7; }
// NP-LOCO flank sets: A = {0,1}, B = {a,a2}.
bool np_in_a(std::optional<int> v) { return v == 0 || v == 1; }
bool np_in_b(std::optional<int> v) { return v == 2 || v == 3; }

std::vector<std::vector<int>> family_patterns(Family family, int param) {
  std::vector<std::vector<int>> pats;
  switch (family) {
    case Family::LoRll:
      for (int k = 0; k < param; ++k) {
        std::vector<int> p{1};
        p.insert(p.end(), static_cast<std::size_t>(k), 0);
        p.push_back(1);
        pats.push_back(std::move(p));
      }
      break;
    case Family::SLoco:
      for (int k = 1; k <= param; ++k) {
        std::vector<int> p0{0};
        p0.insert(p0.end(), static_cast<std::size_t>(k), 1);
        p0.push_back(0);
        std::vector<int> p1{1};
        p1.insert(p1.end(), static_cast<std::size_t>(k), 0);
        p1.push_back(1);
        pats.push_back(std::move(p0));
        pats.push_back(std::move(p1));
      }
      break;
    case Family::OsLoco:
      pats = {{0, 2, 0}, {7, 5, 7}};
      break;
    case Family::OpLoco:
      for (int a : {0, 1, 4, 5})
        for (int b : {0, 1, 4, 5}) pats.push_back({a, 2, b});
      for (int a : {2, 3, 6, 7})
        for (int b : {2, 3, 6, 7}) pats.push_back({a, 5, b});
      break;
    case Family::NsLoco:
      pats = {{3, 0, 3}};
      break;
    case Family::NpLoco:
      for (int a : {0, 1})
        for (int b : {0, 1}) pats.push_back({a, 3, b});
      for (int a : {2, 3})
        for (int b : {2, 3}) pats.push_back({a, 0, b});
      break;
  }
  return pats;
}

int family_q(Family family) {
  switch (family) {
    case Family::LoRll:
    case Family::SLoco:
      return 2;
    case Family::NsLoco:
    case Family::NpLoco:
      return 4;
    case Family::OsLoco:
    case Family::OpLoco:
      return 8;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"lorll", Family::LoRll}, {"sloco", Family::SLoco}, {"os", Family::OsLoco},
      {"op", Family::OpLoco},   {"ns", Family::NsLoco},   {"np", Family::NpLoco},
  };
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown family '" + name + "'");
  return it->second;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::LoRll: return "lorll";
    case Family::SLoco: return "sloco";
    case Family::OsLoco: return "os";
    case Family::OpLoco: return "op";
    case Family::NsLoco: return "ns";
    case Family::NpLoco: return "np";
  }
  throw std::logic_error("unknown family");
}

StreamSymbol StreamSymbol::symbol(int level) {
  if (level < 0) throw std::invalid_argument("negative symbol level");
  return StreamSymbol(level);
}

int StreamSymbol::level() const {
  if (is_no_write()) throw std::logic_error("no-write symbol has no level");
  return level_;
}

std::string to_string(FrameStatus status) {
  switch (status) {
    case FrameStatus::Ok: return "ok";
    case FrameStatus::ConstraintViolation: return "constraint_violation";
    case FrameStatus::IndexOverflow: return "index_overflow";
  }
  return "?";
}

FamilyCodec FamilyCodec::make(Family family, int param, int m) {
  if (m < 1) throw std::invalid_argument("block length m must be >= 1");
  bool parametric = family == Family::LoRll || family == Family::SLoco;
  if (parametric && param < 1) throw std::invalid_argument("family parameter must be >= 1");
  return FamilyCodec(family, parametric ? param : 0, m);
}

FamilyCodec::FamilyCodec(Family family, int param, int m)
    : family_(family),
      param_(param),
      m_(m),
      alphabet_(family_q(family)),
      forbidden_(alphabet_, family_patterns(family, param)) {
  switch (family_) {
    case Family::LoRll:
      smallest_ = -param_;
      excluded_ = 1;  // 0^m, for a guaranteed transition per codeword
      break;
    case Family::SLoco:
      smallest_ = 1 - param_;
      excluded_ = 2;  // 0^m and 1^m
      break;
    case Family::OsLoco:
      smallest_ = -2;
      excluded_ = 0;  // inherently self-clocked via bridging
      break;
    case Family::OpLoco:
      smallest_ = 0;
      excluded_ = 0;
      break;
    case Family::NsLoco:
      smallest_ = -1;
      excluded_ = 0;
      break;
    case Family::NpLoco:
      smallest_ = 0;
      excluded_ = 0;
      break;
  }
  offset_ = excluded_ > 0 ? 1 : 0;

  // Defined cardinalities, then the family recursion up to N(m+1).
  auto push = [&](const BigRat& v) { cards_.push_back(v); };
  int rec_from = 2;
  switch (family_) {
    case Family::LoRll:
      for (int i = -param_; i <= 0; ++i) push(1);
      rec_from = 1;
      break;
    case Family::SLoco:
      for (int i = 1 - param_; i <= 1; ++i) push(2);
      break;
    case Family::OsLoco:
      push(BigRat(1, 36));
      push(BigRat(1, 6));
      push(1);
      push(8);
      break;
    case Family::OpLoco:
      push(2);
      push(8);
      break;
    case Family::NsLoco:
      push(BigRat(1, 3));
      push(1);
      push(4);
      break;
    case Family::NpLoco:
      push(2);
      push(4);
      break;
  }
  auto card = [&](int i) -> const BigRat& {
    return cards_[static_cast<std::size_t>(i - smallest_)];
  };
  for (int i = smallest_ + static_cast<int>(cards_.size()); i <= m_ + 1; ++i) {
    if (i < rec_from) throw std::logic_error("cardinality recursion below threshold");
    BigRat v;
    switch (family_) {
      case Family::LoRll:
        v = card(i - 1) + card(i - param_ - 1);
        break;
      case Family::SLoco:
        v = card(i - 1) + card(i - param_ - 1);
        break;
      case Family::OsLoco:
        v = 8 * card(i - 1) - card(i - 2) + 6 * card(i - 3);
        break;
      case Family::OpLoco:
        v = 7 * card(i - 1) + 4 * card(i - 2);
        break;
      case Family::NsLoco:
        v = 4 * card(i - 1) - card(i - 2) + 3 * card(i - 3);
        break;
      case Family::NpLoco:
        v = 3 * card(i - 1) + 2 * card(i - 2);
        break;
    }
    push(v);
  }
  for (int i = std::max(1, smallest_); i <= m_ + 1; ++i) {
    to_integer(card(i));  // all values at i >= 1 are integers
  }

  BigInt usable = to_integer(card(m_)) - excluded_;
  s_ = usable >= 2 ? floor_log2(usable) : -1;

  switch (family_) {
    case Family::LoRll: classes_ = 1; break;
    case Family::SLoco: classes_ = 3; break;
    case Family::OsLoco: classes_ = 4; break;
    case Family::OpLoco: classes_ = 5; break;
    case Family::NsLoco: classes_ = 2; break;
    case Family::NpLoco: classes_ = 3; break;
  }

  // Per-symbol contributions for every (position, context class, level),
  // exact-rational evaluation frozen to integers up front. The integrality
  // and non-negativity assertions live in to_integer and the check below.
  const int q = alphabet_.q;
  contrib_.reserve(static_cast<std::size_t>(m_) * static_cast<std::size_t>(classes_) *
                   static_cast<std::size_t>(q - 1));
  for (int i = 0; i < m_; ++i) {
    for (int cls = 0; cls < classes_; ++cls) {
      for (int a = 1; a < q; ++a) {
        BigRat g = raw_contribution(cls, i, a);
        if (g < 0) throw std::logic_error("negative per-symbol contribution");
        contrib_.push_back(to_integer(g));
      }
    }
  }
}

const BigRat& FamilyCodec::cardinality(int i) const {
  if (i < smallest_ || i > m_ + 1) {
    throw std::invalid_argument("cardinality index outside the table built for this length");
  }
  return cards_[static_cast<std::size_t>(i - smallest_)];
}

int FamilyCodec::message_length() const {
  if (s_ < 0) {
    throw std::invalid_argument("fewer than two usable codewords at this length");
  }
  return s_;
}

std::vector<Word> FamilyCodec::excluded_codewords() const {
  std::vector<Word> out;
  if (family_ == Family::LoRll || family_ == Family::SLoco) {
    out.emplace_back(alphabet_, std::vector<int>(static_cast<std::size_t>(m_), 0));
    if (family_ == Family::SLoco) {
      out.emplace_back(alphabet_, std::vector<int>(static_cast<std::size_t>(m_), 1));
    }
  }
  return out;
}

bool FamilyCodec::satisfies(const Word& codeword) const {
  if (codeword.alphabet() != alphabet_ || codeword.length() != m_) {
    throw std::invalid_argument("codeword length or alphabet mismatch");
  }
  return !forbidden_.hits(codeword.levels());
}

int FamilyCodec::context_class(const std::vector<int>& msb_levels, int i) const {
  auto sig = [&](int j) -> std::optional<int> {
    if (j >= m_) return std::nullopt;  // z'
    return msb_levels[static_cast<std::size_t>(m_ - 1 - j)];
  };
  const auto c1 = sig(i + 1);
  switch (family_) {
    case Family::LoRll:
      return 0;
    case Family::SLoco: {
      if (c1 != 1) return 0;
      int run = 0;  // consecutive 1s at i+1, i+2, ...
      while (run <= param_ && sig(i + 1 + run) == 1) ++run;
      if (run <= param_ && sig(i + 1 + run) == 0) return 1;  // 0 1^run pattern above
      return 2;                                              // unbroken 1s
    }
    case Family::OsLoco: {
      if (sig(i + 2) == 0 && c1 == 2) return 1;
      if (c1 == 0) return 2;
      if (c1 == 7) return 3;
      return 0;
    }
    case Family::OpLoco: {
      const auto c2 = sig(i + 2);
      if (c1 == 2 && op_in_a(c2)) return 1;
      if (c1 == 5 && op_in_b(c2)) return 2;
      if (op_in_a(c1)) return 3;
      if (op_in_b(c1)) return 4;
      return 0;
    }
    case Family::NsLoco:
      return c1 == 3 ? 1 : 0;
    case Family::NpLoco: {
      if (c1 == 3 && np_in_a(sig(i + 2))) return 1;
      if (np_in_b(c1)) return 2;
      return 0;
    }
  }
  throw std::logic_error("unknown family");
}

BigRat FamilyCodec::raw_contribution(int cls, int i, int a) const {
  auto card = [&](int idx) -> const BigRat& {
    return cards_[static_cast<std::size_t>(idx - smallest_)];
  };
  switch (family_) {
    case Family::LoRll:
      return a * card(i);
    case Family::SLoco: {
      const int y1 = cls == 1 ? 1 : 0;
      const int y2 = cls == 2 ? 1 : 0;
      return BigRat(a - y1) * card(i + 1 - y2 * param_) / 2;
    }
    case Family::OsLoco: {
      const int y1 = cls == 1 ? 1 : 0;
      const int y2 = ((cls == 2 && a >= 3) || (cls == 3 && a >= 6)) ? 1 : 0;
      return (BigRat(a - y1) - BigRat(y2, 2)) * card(i) +
             (1 - y1) * ((3 * y2 - BigRat(1, 2)) * card(i - 1) + 3 * card(i - 2));
    }
    case Family::OpLoco: {
      const int y1 = ((cls == 1 && (a == 2 || a == 3)) || (cls == 2 && (a == 4 || a == 5))) ? 1 : 0;
      const int y2 = (cls == 1 && a >= 6) ? 1 : 0;
      int y3 = 0;
      if (!y1 && !y2) {
        if ((cls == 2 || cls == 3) && a >= 3) y3 = 1;
        if ((cls == 1 || cls == 4) && a >= 6) y3 = 1;
      }
      return BigRat(a - 2 * y1 - 4 * y2 - y3) * card(i + 1) / 8 + BigRat(y3) * card(i) / 2;
    }
    case Family::NsLoco: {
      const int y1 = cls == 1 ? 1 : 0;
      return (a - y1) * card(i) + 3 * y1 * card(i - 1);
    }
    case Family::NpLoco: {
      const int y1 = (cls == 1 && (a == 2 || a == 3)) ? 1 : 0;
      const int y2 = (!y1 && cls >= 1) ? 1 : 0;
      return BigRat(a - 2 * y1 - y2) * card(i + 1) / 4 + BigRat(y2) * card(i) / 2;
    }
  }
  throw std::logic_error("unknown family");
}

const BigInt& FamilyCodec::contribution(int cls, int i, int a) const {
  const int q = alphabet_.q;
  return contrib_[(static_cast<std::size_t>(i) * static_cast<std::size_t>(classes_) +
                   static_cast<std::size_t>(cls)) *
                      static_cast<std::size_t>(q - 1) +
                  static_cast<std::size_t>(a - 1)];
}

BigInt FamilyCodec::index_of(const Word& codeword) const {
  if (!satisfies(codeword)) {
    throw std::invalid_argument("codeword contains a forbidden pattern");
  }
  BigInt g = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    const int a = *codeword.at(i);
    if (a == 0) continue;
    g += contribution(context_class(codeword.levels(), i), i, a);
  }
  return g;
}

Word FamilyCodec::encode(const Bits& message) const {
  if (static_cast<int>(message.size()) != message_length()) {
    throw std::invalid_argument("message length must be exactly s bits");
  }
  BigInt residual = bits_to_integer(message) + offset_;
  const int q = alphabet_.q;
  std::vector<int> levels(static_cast<std::size_t>(m_), 0);
  for (int i = m_ - 1; i >= 0; --i) {
    const int cls = context_class(levels, i);
    int a = 0;
    if (residual >= contribution(cls, i, q - 1)) {
      a = q - 1;
    } else {
      for (int cand = q - 2; cand >= 1; --cand) {
        if (contribution(cls, i, cand) <= residual && residual < contribution(cls, i, cand + 1)) {
          a = cand;
          break;
        }
      }
    }
    if (a > 0) residual -= contribution(cls, i, a);
    levels[static_cast<std::size_t>(m_ - 1 - i)] = a;
  }
  return Word(alphabet_, std::move(levels));
}

FrameStatus FamilyCodec::decode(const Word& codeword, Bits& message_out) const {
  const int s = message_length();
  if (!satisfies(codeword)) return FrameStatus::ConstraintViolation;
  BigInt index = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    const int a = *codeword.at(i);
    if (a == 0) continue;
    index += contribution(context_class(codeword.levels(), i), i, a);
  }
  BigInt message = index - offset_;
  if (message < 0 || message >= (BigInt(1) << static_cast<unsigned>(s))) {
    return FrameStatus::IndexOverflow;
  }
  message_out = integer_to_bits(message, s);
  return FrameStatus::Ok;
}

int FamilyCodec::bridge_length() const {
  switch (family_) {
    case Family::LoRll:
    case Family::SLoco:
      return param_;
    default:
      return 1;
  }
}

SymbolStream FamilyCodec::bridge(const std::vector<int>& tail, const std::vector<int>& head) const {
  if (tail.empty()) throw std::invalid_argument("bridge requires at least one tail symbol");
  for (int v : tail) {
    if (v < 0 || v >= alphabet_.q) throw std::invalid_argument("tail symbol out of range");
  }
  for (int v : head) {
    if (v < 0 || v >= alphabet_.q) throw std::invalid_argument("head symbol out of range");
  }
  const auto t0 = std::optional<int>(tail.back());
  const auto t1 = tail.size() >= 2 ? std::optional<int>(tail[tail.size() - 2]) : std::nullopt;
  const auto h0 = head.size() >= 1 ? std::optional<int>(head[0]) : std::nullopt;
  const auto h1 = head.size() >= 2 ? std::optional<int>(head[1]) : std::nullopt;

  switch (family_) {
    case Family::LoRll:
      return SymbolStream(static_cast<std::size_t>(param_), StreamSymbol::symbol(0));
    case Family::SLoco:
      return SymbolStream(static_cast<std::size_t>(param_), StreamSymbol::no_write());
    case Family::OsLoco:
      // a3 when both neighbours are a2, else a2
      return {StreamSymbol::symbol(t0 == 3 && h0 == 3 ? 4 : 3)};
    case Family::NsLoco:
      return {StreamSymbol::symbol(t0 == 1 && h0 == 1 ? 2 : 1)};
    case Family::OpLoco: {
      // a2 sits in the a4-flank set, a3 in the a-flank set; pick whichever
      // cannot complete a forbidden window, no-write when neither can.
      const bool a2_unsafe = (op_in_b(t1) && t0 == 5) || (h0 == 5 && op_in_b(h1));
      const bool a3_unsafe = (op_in_a(t1) && t0 == 2) || (h0 == 2 && op_in_a(h1));
      if (a2_unsafe && a3_unsafe) return {StreamSymbol::no_write()};
      if (a2_unsafe || (t0 == 5 && h0 != 2) || (t0 == 3 && h0 == 3)) {
        return {StreamSymbol::symbol(4)};
      }
      return {StreamSymbol::symbol(3)};
    }
    case Family::NpLoco: {
      const bool a_unsafe = (np_in_b(t1) && t0 == 0) || (h0 == 0 && np_in_b(h1));
      const bool one_unsafe = (np_in_a(t1) && t0 == 3) || (h0 == 3 && np_in_a(h1));
      if (a_unsafe && one_unsafe) return {StreamSymbol::no_write()};
      if (a_unsafe || (t0 == 0 && h0 != 3) || (t0 == 2 && h0 == 2)) {
        return {StreamSymbol::symbol(1)};
      }
      return {StreamSymbol::symbol(2)};
    }
  }
  throw std::logic_error("unknown family");
}

FamilyCodec::RateInfo FamilyCodec::rate() const {
  const int s = message_length();
  RateInfo info;
  info.adder_bits = s;
  switch (family_) {
    case Family::LoRll:
    case Family::SLoco:
      info.bits_per_symbol = static_cast<double>(s) / (m_ + param_);
      info.normalized = info.bits_per_symbol;
      break;
    case Family::OsLoco:
    case Family::OpLoco:
      info.bits_per_symbol = static_cast<double>(s) / (m_ + 1);
      info.normalized = info.bits_per_symbol / 3.0;
      break;
    case Family::NsLoco:
      info.bits_per_symbol = static_cast<double>(s) / (m_ + 1) + 1.0;
      info.normalized = info.bits_per_symbol / 3.0;
      break;
    case Family::NpLoco:
      info.bits_per_symbol = static_cast<double>(s + m_) / (m_ + 1);
      info.normalized = info.bits_per_symbol / 3.0;
      break;
  }
  return info;
}

SchemeCapacity scheme_capacity(const FamilyCodec& codec, double tol) {
  auto automaton = ConstraintAutomaton::build(codec.forbidden());
  auto cap = capacity(automaton, tol);
  SchemeCapacity out;
  out.constrained_bits = cap.bits_per_symbol;
  out.bits_per_symbol = cap.bits_per_symbol + (codec.is_scheme() ? 1.0 : 0.0);
  out.normalized = codec.q() == 2 ? out.bits_per_symbol : out.bits_per_symbol / 3.0;
  return out;
}

}  // namespace loco
