#include "ibc/profile.hpp"

#include <fstream>

#include "ibc/error.hpp"

namespace ibc {

namespace {

// Smallest prime at or above SHA3-256("IBC.production.M") with the top bit forced.
constexpr const char* kProductionModulus =
    "87073689487629259140321112705567283474780311981956865896781770502992906054797";

BigInt pow2(unsigned bits) { return BigInt(1) << bits; }

BigInt read_big(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(Errc::InvalidArgument, std::string("profile is missing '") + key + "'");
  const auto& v = j.at(key);
  try {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  } catch (const std::runtime_error&) {
  }
  throw Error(Errc::InvalidArgument, std::string("profile field '") + key + "' is not an integer");
}

std::string_view mode_name(osc::ModePolicy mode) {
  switch (mode) {
    case osc::ModePolicy::Auto: return "auto";
    case osc::ModePolicy::Table: return "table";
    case osc::ModePolicy::OnDemand: return "on-demand";
  }
  return "auto";
}

osc::ModePolicy parse_mode(const std::string& s) {
  if (s == "auto") return osc::ModePolicy::Auto;
  if (s == "table") return osc::ModePolicy::Table;
  if (s == "on-demand") return osc::ModePolicy::OnDemand;
  throw Error(Errc::InvalidArgument, "unknown oscillator_mode '" + s + "'");
}

void validate(const Profile& p) {
  auto fail = [&](const std::string& why) { throw Error(Errc::InvalidArgument, "profile " + p.name + ": " + why); };
  if (!p.modulus.is_prime()) fail("modulus must be prime");
  if (p.K_min < 2 || p.K_min > p.K_max) fail("need 2 <= K_min <= K_max");
  if (p.C_min < 1 || p.C_min > p.C_max) fail("need 1 <= C_min <= C_max");
  if (p.u_bits < 1 || p.u_bits > 32) fail("u_bits must be in [1, 32]");
  if (p.v_bits < 1 || p.v_bits > 64) fail("v_bits must be in [1, 64]");
  if (p.hash != "SHA3-256") fail("only SHA3-256 is supported");
  if (byte_length(p.modulus.value() - 1) > 32) fail("modulus residues must fit in 32 bytes");
}

}  // namespace

Profile Profile::toy() {
  return Profile{"toy", Modulus::prime(257), 2, pow2(16), 2, pow2(10), 16, 16, "SHA3-256",
                 osc::ModePolicy::Auto, 8, 8};
}

Profile Profile::production() {
  return Profile{"production", Modulus::prime(BigInt(kProductionModulus)), pow2(160), pow2(256), pow2(24),
                 pow2(32), 32, 64, "SHA3-256", osc::ModePolicy::OnDemand, 32, 32};
}

Profile Profile::mini() {
  return Profile{"mini", Modulus::prime(17), 2, 16, 2, 16, 16, 4, "SHA3-256", osc::ModePolicy::Auto, 8, 8};
}

Profile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidArgument, "profile must be a JSON object");
  try {
    const std::string name = j.at("name").get<std::string>();
    const bool strict = name == "production";
    Profile p{name,
              Modulus::prime(read_big(j, "M")),
              read_big(j, "K_min"),
              read_big(j, "K_max"),
              read_big(j, "C_min"),
              read_big(j, "C_max"),
              j.at("u_bits").get<unsigned>(),
              j.at("v_bits").get<unsigned>(),
              j.at("hash").get<std::string>(),
              parse_mode(j.value("oscillator_mode", strict ? "on-demand" : "auto")),
              j.value<std::size_t>("min_secret_bytes", strict ? 32 : 8),
              j.value<std::size_t>("min_nonce_bytes", strict ? 32 : 8)};
    validate(p);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed profile: ") + e.what());
  }
}

nlohmann::json profile_to_json(const Profile& p) {
  return nlohmann::json{{"name", p.name},
                        {"M", p.modulus.value().str()},
                        {"K_min", p.K_min.str()},
                        {"K_max", p.K_max.str()},
                        {"C_min", p.C_min.str()},
                        {"C_max", p.C_max.str()},
                        {"u_bits", p.u_bits},
                        {"v_bits", p.v_bits},
                        {"hash", p.hash},
                        {"oscillator_mode", mode_name(p.oscillator_mode)},
                        {"min_secret_bytes", p.min_secret_bytes},
                        {"min_nonce_bytes", p.min_nonce_bytes}};
}

Profile load_profile(const std::string& name_or_path) {
  if (name_or_path == "toy") return Profile::toy();
  if (name_or_path == "production") return Profile::production();
  if (name_or_path == "mini") return Profile::mini();
  std::ifstream in(name_or_path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open profile '" + name_or_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("profile is not valid JSON: ") + e.what());
  }
  return profile_from_json(j);
}

}  // namespace ibc
