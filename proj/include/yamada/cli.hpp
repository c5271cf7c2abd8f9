#pragma once

#include <ostream>

namespace yamada {

/// Entry point of the `yamada` tool. Returns 0 on success, 1 on usage or
/// input errors, 2 when a requested check fails.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace yamada
