#include "cli.hpp"

#include <fcntl.h>
#include <openssl/rand.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "ibc/error.hpp"
#include "ibc/fixtures.hpp"
#include "ibc/harness.hpp"
#include "ibc/hash.hpp"
#include "ibc/protocol.hpp"
#include "ibc/selftest.hpp"

namespace ibc::cli {

namespace {

struct CliError {
  int code;
  std::string message;
};

Bytes read_file(const std::string& path) {
  if (path == "-") {
    std::string data((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return Bytes(data.begin(), data.end());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kIoError, "cannot read " + path};
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, ByteView data, std::ostream& out) {
  if (path == "-") {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw CliError{kIoError, "cannot write " + path};
}

Bytes os_random(std::size_t n) {
  Bytes out(n);
  if (RAND_bytes(out.data(), static_cast<int>(n)) != 1) throw CliError{kIoError, "entropy source failed"};
  return out;
}

std::string fingerprint(ByteView S) {
  Digest d = hash::sha3_256(ByteWriter().put("IBC.fingerprint").put(S).bytes());
  return to_hex(ByteView(d.data(), 16));
}

// Line-oriented "<secret fingerprint> <nonce hex>" file under an exclusive
// advisory lock for the lifetime of the object.
class NonceLog {
 public:
  explicit NonceLog(const std::string& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0600);
    if (fd_ < 0) throw CliError{kIoError, "cannot open nonce log " + path};
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw CliError{kIoError, "cannot lock nonce log " + path};
    }
    std::string text;
    char buf[4096];
    ::lseek(fd_, 0, SEEK_SET);
    for (ssize_t n; (n = ::read(fd_, buf, sizeof buf)) > 0;) text.append(buf, static_cast<std::size_t>(n));
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) entries_.insert(line);
    }
  }
  ~NonceLog() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  NonceLog(const NonceLog&) = delete;
  NonceLog& operator=(const NonceLog&) = delete;

  bool contains(const std::string& entry) const { return entries_.count(entry) != 0; }

  void append(const std::string& entry) {
    const std::string line = entry + "\n";
    if (::write(fd_, line.data(), line.size()) != static_cast<ssize_t>(line.size()) || ::fsync(fd_) != 0) {
      throw CliError{kIoError, "cannot append to nonce log"};
    }
    entries_.insert(entry);
  }

 private:
  int fd_ = -1;
  std::set<std::string> entries_;
};

bool is_abort(Errc c) {
  return c == Errc::AbortZeroIndex || c == Errc::AbortSingular || c == Errc::AbortNonInvertible;
}

struct SendArgs {
  std::string secret_file, profile = "toy", out, z_hex, nonce_log = "ibc-nonces.log";
  std::uint64_t v = 0;
  std::optional<std::uint32_t> u;
  bool allow_explicit_nonce = false;
};

int cmd_send(const SendArgs& a, std::ostream& out, std::ostream& err) {
  const Profile profile = load_profile(a.profile);
  const Bytes S = read_file(a.secret_file);
  if (!a.z_hex.empty() && !a.allow_explicit_nonce) {
    throw CliError{kMalformed, "--z requires --allow-explicit-nonce"};
  }
  std::uint32_t u = 0;
  if (a.u) {
    u = *a.u;
  } else {
    const Bytes r = os_random(4);
    const std::uint64_t span = profile.u_limit().convert_to<std::uint64_t>() - 1;
    u = static_cast<std::uint32_t>(from_be_bytes(r).convert_to<std::uint64_t>() % span + 1);
  }

  NonceLog log(a.nonce_log);
  const std::string fp = fingerprint(S);
  const bool explicit_nonce = !a.z_hex.empty();
  // Session aborts depend only on (S, z), so a fresh automatic nonce is the
  // redraw. An explicit nonce that aborts is reported instead.
  for (int attempt = 0;; ++attempt) {
    Bytes z;
    if (explicit_nonce) {
      try {
        z = from_hex(a.z_hex);
      } catch (const std::exception&) {
        throw CliError{kMalformed, "--z is not valid hex"};
      }
      if (z.size() != kNonceBytes) throw CliError{kMalformed, "--z must be 32 bytes (64 hex digits)"};
    } else {
      z = os_random(kNonceBytes);
    }
    const std::string entry = fp + " " + to_hex(z);
    if (log.contains(entry)) throw CliError{kNonceReuse, "nonce already used with this secret"};
    try {
      const Session sess = protocol::derive_session(S, z, profile);
      const Message msg = protocol::alice_generate(sess, u, a.v);
      const WireBytes wire = serialize(msg);
      write_file(a.out, wire, out);
      log.append(entry);
      err << "sent u=" << u << " z=" << to_hex(z) << "\n";
      return kOk;
    } catch (const Error& e) {
      const bool session_abort = e.code() == Errc::AbortZeroIndex || e.code() == Errc::AbortSingular;
      if (explicit_nonce || !session_abort || attempt >= 100) throw;
    }
  }
}

int cmd_recv(const std::string& secret_file, const std::string& profile_name, const std::string& in,
             std::ostream& out) {
  const Profile profile = load_profile(profile_name);
  const Bytes S = read_file(secret_file);
  const Bytes wire = read_file(in);
  const Message msg = deserialize(wire, profile.modulus);
  out << protocol::bob_verify(S, msg, profile) << "\n";
  return kOk;
}

int cmd_selftest(const std::string& profile_name, std::uint64_t seed, std::ostream& out) {
  const Profile profile = load_profile(profile_name);
  bool all = true;
  for (const auto& r : selftest::run_all(profile, seed)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  out << (all ? "all suites passed" : "some suites failed") << "\n";
  return all ? kOk : kPropertyFailed;
}

int cmd_attack(const std::string& adversary, const std::string& profile_name, std::uint64_t trials,
               std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (adversary != "random") throw CliError{kMalformed, "unknown adversary '" + adversary + "'"};
  const Profile profile = load_profile(profile_name);
  const auto report = harness::run_random_adversary(profile, trials, seed);
  out << harness::csv_header() << "\n" << harness::csv_row(report) << "\n";
  err << harness::summary(report) << "\n";
  // Fails only on significant evidence of an advantage above 2/M. Small trial
  // counts cannot push the upper end below 2/M, so that side is not tested.
  const double bound = 2.0 / profile.modulus.value().convert_to<double>();
  if (report.ci.low > bound) {
    err << "advantage bound 2/M = " << bound << " exceeded\n";
    return kPropertyFailed;
  }
  return kOk;
}

int cmd_fixtures(const std::string& path, std::ostream& out) {
  const std::string text = fixtures::fixture_file();
  write_file(path, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), out);
  return kOk;
}

int exit_for(Errc c, bool verifying) {
  switch (c) {
    case Errc::RejectHash:
    case Errc::RejectDenominator:
    case Errc::RejectRange:
    case Errc::FieldOverflow:
      return kRejected;
    case Errc::NonceReuse:
      return kNonceReuse;
    default:
      // A tampered nonce can make Bob's re-derived session abort; that is a
      // rejection, not malformed input.
      return verifying && is_abort(c) ? kRejected : kMalformed;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant-based symmetric message scheme"};
  app.require_subcommand(1);

  SendArgs send;
  auto* send_cmd = app.add_subcommand("send", "Generate a message for payload v");
  send_cmd->add_option("--secret-file", send.secret_file, "File holding the shared secret S")->required();
  send_cmd->add_option("--profile", send.profile, "toy, production, mini or a JSON profile path");
  send_cmd->add_option("--v", send.v, "Secret payload")->required();
  send_cmd->add_option("--u", send.u, "Public spacing (random if omitted)");
  send_cmd->add_option("--z", send.z_hex, "Explicit nonce, 64 hex digits");
  send_cmd->add_flag("--allow-explicit-nonce", send.allow_explicit_nonce, "Permit --z");
  send_cmd->add_option("--nonce-log", send.nonce_log, "Nonce log path");
  send_cmd->add_option("--out", send.out, "Message file, '-' for stdout")->required();

  std::string recv_secret, recv_profile = "toy", recv_in;
  auto* recv_cmd = app.add_subcommand("recv", "Verify a message and print v");
  recv_cmd->add_option("--secret-file", recv_secret, "File holding the shared secret S")->required();
  recv_cmd->add_option("--profile", recv_profile, "toy, production, mini or a JSON profile path");
  recv_cmd->add_option("--in", recv_in, "Message file, '-' for stdin")->required();

  std::string st_profile = "toy";
  std::uint64_t st_seed = 1;
  auto* st_cmd = app.add_subcommand("selftest", "Run the property suites");
  st_cmd->add_option("--profile", st_profile, "Profile to test");
  st_cmd->add_option("--seed", st_seed, "Sampling seed");

  std::string adversary = "random", at_profile = "toy";
  std::uint64_t trials = 10000, at_seed = 1;
  auto* at_cmd = app.add_subcommand("attack", "Estimate adversary advantage; CSV on stdout");
  at_cmd->add_option("--adversary", adversary, "Adversary strategy (random)");
  at_cmd->add_option("--trials", trials, "Number of games")->check(CLI::Range(std::uint64_t{100}, std::uint64_t{100000000}));
  at_cmd->add_option("--profile", at_profile, "Profile");
  at_cmd->add_option("--seed", at_seed, "First game seed");

  std::string fx_out;
  auto* fx_cmd = app.add_subcommand("fixtures", "Write regression vectors and the worked example audit");
  fx_cmd->add_option("--out", fx_out, "Output path, '-' for stdout")->required();

  const bool verifying = [&] {
    for (int k = 1; k < argc; ++k) {
      if (std::string_view(argv[k]) == "recv") return true;
    }
    return false;
  }();

  try {
    app.parse(argc, argv);
    if (*send_cmd) return cmd_send(send, out, err);
    if (*recv_cmd) return cmd_recv(recv_secret, recv_profile, recv_in, out);
    if (*st_cmd) return cmd_selftest(st_profile, st_seed, out);
    if (*at_cmd) return cmd_attack(adversary, at_profile, trials, at_seed, out, err);
    if (*fx_cmd) return cmd_fixtures(fx_out, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << (verifying ? "rejected: " : "error: ") << e.what() << "\n";
    return exit_for(e.code(), verifying);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace ibc::cli
