#ifndef ROOTPIPE_TOOLS_CLI_H_
#define ROOTPIPE_TOOLS_CLI_H_

#include <iosfwd>

namespace rootpipe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoRoot = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the binary and the tests. Never calls exit().
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace rootpipe::cli

#endif  // ROOTPIPE_TOOLS_CLI_H_
