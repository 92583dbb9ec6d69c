#pragma once

#include <iosfwd>

namespace opaque::cli {

// Exit codes. Verification verdicts map to 0-2, errors start at 10.
enum Exit : int {
  kCertified = 0,
  kWitness = 1,
  kUnresolved = 2,
  kUsage = 10,
  kSyntax = 11,
  kSchema = 12,
  kNonConvex = 13,
  kZeroLength = 14,
  kDegenerate = 15,
  kPrecondition = 16,
  kInvalidArgument = 17,
  kIo = 18,
};

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace opaque::cli
