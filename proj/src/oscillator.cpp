#include "ibc/oscillator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ibc/error.hpp"
#include "ibc/hash.hpp"

namespace ibc::osc {

namespace {

// SHAKE256 rate; one permutation yields a full block.
constexpr std::size_t kBlockBytes = 136;
// Extra bytes per entry beyond the width of M keep the reduction bias below 2^-64.
constexpr std::size_t kSlackBytes = 8;

struct StreamLayout {
  std::size_t entry_bytes;
  std::size_t per_block;

  explicit StreamLayout(const Modulus& m)
      : entry_bytes(m.byte_width() + kSlackBytes),
        per_block(std::max<std::size_t>(1, kBlockBytes / entry_bytes)) {}

  std::size_t block_bytes() const { return entry_bytes * per_block; }
};

FieldElem reduce_entry(const std::uint8_t* p, std::size_t len, const Modulus& m) {
  if (len <= 16 && m.value() <= std::numeric_limits<std::uint64_t>::max()) {
    unsigned __int128 acc = 0;
    for (std::size_t k = 0; k < len; ++k) acc = (acc << 8) | p[k];
    auto mod = m.value().convert_to<std::uint64_t>();
    return m.elem(BigInt(static_cast<std::uint64_t>(acc % mod)));
  }
  return m.elem(from_be_bytes(ByteView(p, len)));
}

FieldElem prf_entry(ByteView key, const BigInt& k, const Modulus& m) {
  StreamLayout layout(m);
  BigInt block = k / layout.per_block;
  auto slot = static_cast<std::size_t>(BigInt(k % layout.per_block));
  ByteWriter w;
  w.put(key).put_prefixed(block);
  Bytes out = hash::shake256(w.bytes(), layout.block_bytes());
  return reduce_entry(out.data() + slot * layout.entry_bytes, layout.entry_bytes, m);
}

std::vector<FieldElem> materialize(ByteView key, const BigInt& P, const Modulus& m) {
  StreamLayout layout(m);
  auto total = P.convert_to<std::size_t>();
  std::vector<FieldElem> values;
  values.reserve(total);
  for (std::size_t block = 0; values.size() < total; ++block) {
    ByteWriter w;
    w.put(key).put_prefixed(BigInt(block));
    Bytes out = hash::shake256(w.bytes(), layout.block_bytes());
    for (std::size_t slot = 0; slot < layout.per_block && values.size() < total; ++slot) {
      values.push_back(reduce_entry(out.data() + slot * layout.entry_bytes, layout.entry_bytes, m));
    }
  }
  return values;
}

void check_shape(const BigInt& K, const BigInt& C) {
  if (K < 1 || C < 1) throw Error(Errc::InvalidArgument, "oscillator needs K >= 1 and C >= 1");
}

}  // namespace

std::string_view tag_label(Tag tag) noexcept {
  return tag == Tag::Phi ? "IBC.osc.phi" : "IBC.osc.psi";
}

Oscillator::Oscillator(std::variant<Table, OnDemand> mode, BigInt K, BigInt C, Modulus m)
    : mode_(std::move(mode)), K_(std::move(K)), C_(std::move(C)), P_(K_ * C_), m_(std::move(m)) {}

Oscillator Oscillator::from_seed(OscSeed seed, const Modulus& m) {
  check_shape(seed.K, seed.C);
  if (BigInt(seed.values.size()) != seed.period()) {
    throw Error(Errc::InvalidArgument, "seed length " + std::to_string(seed.values.size()) +
                                           " does not match K*C = " + seed.period().str());
  }
  auto values = std::make_shared<const std::vector<FieldElem>>(std::move(seed.values));
  return Oscillator(Table{std::move(values)}, std::move(seed.K), std::move(seed.C), m);
}

Oscillator Oscillator::on_demand(Bytes key, BigInt K, BigInt C, const Modulus& m) {
  check_shape(K, C);
  return Oscillator(OnDemand{std::move(key)}, std::move(K), std::move(C), m);
}

Oscillator Oscillator::table_from_key(Bytes key, BigInt K, BigInt C, const Modulus& m) {
  check_shape(K, C);
  BigInt P = K * C;
  if (P > kMaxTableEntries) {
    throw Error(Errc::SeedTooLarge, "table of " + P.str() + " entries exceeds " +
                                        std::to_string(kMaxTableEntries));
  }
  auto values = std::make_shared<const std::vector<FieldElem>>(materialize(key, P, m));
  return Oscillator(Table{std::move(values)}, std::move(K), std::move(C), m);
}

FieldElem Oscillator::seed_entry(const BigInt& k) const {
  if (k < 0 || k >= P_) throw Error(Errc::OutOfRange, "seed index outside [0, P)");
  if (const auto* table = std::get_if<Table>(&mode_)) {
    return (*table->values)[k.convert_to<std::size_t>()];
  }
  return prf_entry(std::get<OnDemand>(mode_).key, k, m_);
}

FieldElem Oscillator::eval_index(const BigInt& j) const {
  BigInt block = floor_div(j, P_);
  FieldElem value = seed_entry(euclid_mod(j, P_));
  return boost::multiprecision::bit_test(block, 0) ? m_.neg(value) : value;
}

const std::vector<FieldElem>& Oscillator::table_values() const {
  if (const auto* table = std::get_if<Table>(&mode_)) return *table->values;
  throw Error(Errc::Unsupported, "on-demand oscillator has no table");
}

bool operator==(const Oscillator& a, const Oscillator& b) {
  if (a.K_ != b.K_ || a.C_ != b.C_ || !(a.m_ == b.m_) || a.mode_.index() != b.mode_.index()) return false;
  if (a.is_table()) return *std::get<Oscillator::Table>(a.mode_).values == *std::get<Oscillator::Table>(b.mode_).values;
  return std::get<Oscillator::OnDemand>(a.mode_).key == std::get<Oscillator::OnDemand>(b.mode_).key;
}

Oscillator generate(ByteView S, ByteView z, Tag tag, const BigInt& K, const BigInt& C, const Modulus& m,
                    ModePolicy policy) {
  Bytes key = ByteWriter().put(tag_label(tag)).put(S).put(z).take();
  bool table = policy == ModePolicy::Table || (policy == ModePolicy::Auto && K * C <= kAutoTableEntries);
  if (table) return Oscillator::table_from_key(std::move(key), K, C, m);
  return Oscillator::on_demand(std::move(key), K, C, m);
}

FieldElem value_at(const Oscillator& osc, const EvalPoint& x) {
  if (x.denominator != osc.K()) {
    throw Error(Errc::InvalidArgument, "argument is not on the oscillator grid");
  }
  return osc.eval_index(x.numerator);
}

FieldElem eval_at(const Oscillator& osc, const EvalPoint& t) {
  if (t.denominator != osc.K()) {
    throw Error(Errc::InvalidArgument, "evaluation point is not on the oscillator grid");
  }
  return osc.eval_index(osc.C() * t.numerator);
}

std::string export_seed(const Oscillator& osc) {
  std::ostringstream out;
  for (const auto& v : osc.table_values()) out << v.value() << '\n';
  return out.str();
}

OscSeed import_seed(std::string_view text, const BigInt& K, const BigInt& C, const Modulus& m) {
  OscSeed seed{{}, K, C};
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      seed.values.push_back(m.elem(BigInt(line)));
    } catch (const std::runtime_error&) {
      throw Error(Errc::InvalidArgument, "bad seed line: " + line);
    }
  }
  if (BigInt(seed.values.size()) != seed.period()) {
    throw Error(Errc::InvalidArgument, "seed has " + std::to_string(seed.values.size()) +
                                           " entries, expected " + seed.period().str());
  }
  return seed;
}

}  // namespace ibc::osc
