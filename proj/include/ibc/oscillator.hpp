#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ibc/grid.hpp"

namespace ibc::osc {

enum class Tag { Phi, Psi };

// Domain-separation label used when deriving the stream for `tag`.
std::string_view tag_label(Tag tag) noexcept;

inline constexpr unsigned long kMaxTableEntries = 1ul << 20;
// Auto builds a table only below this size. A session touches four indices,
// so a large table costs far more than on-demand lookups ever save.
inline constexpr unsigned long kAutoTableEntries = 1ul << 12;

enum class ModePolicy {
  Auto,   // table when K*C <= kAutoTableEntries, on-demand otherwise
  Table,
  OnDemand,
};

// Base half-period: P = K*C values for the grid points 0, 1/K, ..., C - 1/K.
struct OscSeed {
  std::vector<FieldElem> values;
  BigInt K;
  BigInt C;

  BigInt period() const { return K * C; }
};

// Antiperiodic oscillator on the grid (1/K)Z. Index j maps to
// (-1)^floor(j/P) * seed[j mod P] with Euclidean floor/mod, so
// value(j + P) = -value(j) for every integer j.
//
// Cheap to copy: table storage is shared and immutable.
class Oscillator {
 public:
  static Oscillator from_seed(OscSeed seed, const Modulus& m);
  // Entries derived on demand from the keyed stream; no table is built.
  static Oscillator on_demand(Bytes key, BigInt K, BigInt C, const Modulus& m);
  // Same stream as on_demand, materialized. Throws Errc::SeedTooLarge above
  // kMaxTableEntries entries.
  static Oscillator table_from_key(Bytes key, BigInt K, BigInt C, const Modulus& m);

  bool is_table() const noexcept { return std::holds_alternative<Table>(mode_); }
  const BigInt& K() const noexcept { return K_; }
  const BigInt& C() const noexcept { return C_; }
  const BigInt& period() const noexcept { return P_; }

  // Base-period entry k in [0, P).
  FieldElem seed_entry(const BigInt& k) const;
  FieldElem eval_index(const BigInt& j) const;

  // Only valid for table mode.
  const std::vector<FieldElem>& table_values() const;

  friend bool operator==(const Oscillator& a, const Oscillator& b);

 private:
  struct Table {
    std::shared_ptr<const std::vector<FieldElem>> values;
  };
  struct OnDemand {
    Bytes key;
  };

  Oscillator(std::variant<Table, OnDemand> mode, BigInt K, BigInt C, Modulus m);

  std::variant<Table, OnDemand> mode_;
  BigInt K_, C_, P_;
  Modulus m_;
};

// Oscillator for (S, z, tag) with the stream keyed by tag_label(tag) || S || z.
Oscillator generate(ByteView S, ByteView z, Tag tag, const BigInt& K, const BigInt& C, const Modulus& m,
                    ModePolicy policy = ModePolicy::Auto);

// phi(x) for x on the grid (1/K)Z: index j = numerator(x). Antiperiodic in x
// with antiperiod C.
FieldElem value_at(const Oscillator& osc, const EvalPoint& x);

// Value at the oscillator argument C*t, i.e. index j = C * numerator(t).
// t must lie on the oscillator's grid (denominator K).
FieldElem eval_at(const Oscillator& osc, const EvalPoint& t);

// One decimal residue per line.
std::string export_seed(const Oscillator& osc);
// Accepts signed decimals (reduced mod M); line count must equal K*C.
OscSeed import_seed(std::string_view text, const BigInt& K, const BigInt& C, const Modulus& m);

}  // namespace ibc::osc
