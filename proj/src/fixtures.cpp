#include "ibc/fixtures.hpp"

#include <sstream>

#include "ibc/audit.hpp"
#include "ibc/error.hpp"
#include "ibc/hash.hpp"
#include "ibc/profile.hpp"
#include "ibc/protocol.hpp"

namespace ibc::fixtures {

namespace {

struct VectorPlan {
  const char* profile;
  std::uint32_t u;
  std::uint64_t v;
};

constexpr VectorPlan kPlans[] = {
    {"toy", 5, 17},         {"toy", 1, 0},          {"toy", 65535, 256},   {"toy", 2, 100},
    {"toy", 40000, 1},      {"mini", 3, 7},         {"mini", 1, 15},       {"production", 5, 17},
    {"production", 1, 0},   {"production", 4294967295u, 18446744073709551615ull},
};

Bytes derive(std::string_view label, std::uint32_t index, std::uint32_t attempt) {
  Digest d = hash::sha3_256(ByteWriter().put(label).put_u32(index).put_u32(attempt).bytes());
  return Bytes(d.begin(), d.end());
}

}  // namespace

std::vector<FixtureVector> fixture_vectors() {
  std::vector<FixtureVector> out;
  std::uint32_t index = 0;
  for (const auto& plan : kPlans) {
    const Profile profile = load_profile(plan.profile);
    const Bytes S = derive("fixture.S", index, 0);
    for (std::uint32_t attempt = 0;; ++attempt) {
      if (attempt > 1000) throw Error(Errc::InvalidArgument, "fixture keeps aborting");
      const Bytes z = derive("fixture.z", index, attempt);
      try {
        const Session sess = protocol::derive_session(S, z, profile);
        const Message msg = protocol::alice_generate(sess, plan.u, plan.v);
        out.push_back({plan.profile, S, z, plan.u, plan.v, serialize(msg)});
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::AbortZeroIndex && e.code() != Errc::AbortSingular &&
            e.code() != Errc::AbortNonInvertible) {
          throw;
        }
      }
    }
    ++index;
  }
  return out;
}

std::string format_vectors(const std::vector<FixtureVector>& vectors) {
  std::ostringstream out;
  for (const auto& f : vectors) {
    out << "vector " << f.profile << ' ' << to_hex(f.S) << ' ' << to_hex(f.z) << ' ' << f.u << ' ' << f.v << ' '
        << to_hex(f.message) << '\n';
  }
  return out.str();
}

std::vector<FixtureVector> parse_vectors(std::string_view text) {
  std::vector<FixtureVector> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string kind, s_hex, z_hex, msg_hex;
    FixtureVector f;
    if (!(fields >> kind) || kind != "vector") continue;
    if (!(fields >> f.profile >> s_hex >> z_hex >> f.u >> f.v >> msg_hex)) {
      throw Error(Errc::InvalidArgument, "malformed fixture line: " + line);
    }
    f.S = from_hex(s_hex);
    f.z = from_hex(z_hex);
    Bytes msg = from_hex(msg_hex);
    if (msg.size() != kMessageBytes) throw Error(Errc::BadLength, "fixture message is not 132 bytes");
    std::copy(msg.begin(), msg.end(), f.message.begin());
    out.push_back(std::move(f));
  }
  return out;
}

std::string fixture_file() {
  std::ostringstream out;
  out << "# regression vectors: vector <profile> <S> <z> <u> <v> <message>\n";
  out << format_vectors(fixture_vectors());
  out << "# worked example audit\n";
  std::istringstream audit_lines(audit::format_audit(audit::worked_example_audit()));
  std::string line;
  while (std::getline(audit_lines, line)) out << "audit\t" << line << '\n';
  return out.str();
}

}  // namespace ibc::fixtures
