#pragma once
// Command-line surface. cli_run is stream-parameterized so tests can drive it
// in-process; the installed binary forwards to cli_main.
//
// Exit codes:
//   0  success
//   1  verified negative: no partition exists, search exhausted, or a
//      verification failed
//   2  usage or precondition error (bad flags, wrong sizes, unsupported group)
//   3  node/time budget exhausted before an answer
//   4  internal invariant failure (a bug; the message carries a repro hint)

#include <iosfwd>
#include <string>
#include <vector>

namespace zsp {

// args = argv[1..] in natural order (no program name).
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace zsp
