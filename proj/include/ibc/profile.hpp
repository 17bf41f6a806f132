#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "ibc/oscillator.hpp"

namespace ibc {

// Public parameter set shared by both parties.
struct Profile {
  std::string name;
  Modulus modulus;
  BigInt K_min, K_max;
  BigInt C_min, C_max;
  unsigned u_bits = 16;
  unsigned v_bits = 16;
  std::string hash = "SHA3-256";
  osc::ModePolicy oscillator_mode = osc::ModePolicy::Auto;
  std::size_t min_secret_bytes = 32;
  std::size_t min_nonce_bytes = 32;

  BigInt u_limit() const { return BigInt(1) << u_bits; }
  BigInt v_limit() const { return BigInt(1) << v_bits; }

  // M = 257, K in [2, 2^16], C in [2, 2^10], 16-bit u and v.
  static Profile toy();
  // 256-bit prime M, K in [2^160, 2^256], C in [2^24, 2^32], 32-bit u, 64-bit v.
  static Profile production();
  // M = 17; small enough for exhaustive cross-checks.
  static Profile mini();
};

// Keys: name, M (decimal string), K_min, K_max, C_min, C_max (decimal strings
// or numbers), u_bits, v_bits, hash. Optional: oscillator_mode
// ("auto" | "table" | "on-demand"), min_secret_bytes, min_nonce_bytes.
// Throws Errc::InvalidArgument on a malformed or inconsistent profile.
Profile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const Profile& p);

// "toy", "production" and "mini" name the presets; anything else is read as
// a JSON file path.
Profile load_profile(const std::string& name_or_path);

}  // namespace ibc
