#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laz::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kPrecondition = 3 };

/// Runs one laz_forge invocation; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laz::cli
