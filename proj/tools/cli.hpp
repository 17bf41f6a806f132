#pragma once

#include <iosfwd>

namespace ibc::cli {

// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kRejected = 1,       // verification failed (tag, divisor, range, non-canonical field)
  kMalformed = 2,      // bad arguments, malformed input, protocol abort
  kNonceReuse = 3,     // nonce already logged for this secret
  kPropertyFailed = 4, // selftest or attack bound violated
  kIoError = 5,        // unreadable or unwritable file
};

// Runs the command line as the `ibc` binary would. Output goes to the given
// streams so tests can capture it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ibc::cli
