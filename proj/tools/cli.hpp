#pragma once

#include <iosfwd>

namespace gvz {

/// Entry point of the command-line tool. Exit codes: 0 success,
/// 1 verification violations, 2 usage, input or load errors.
int cli_main(int argc, char** argv);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gvz
