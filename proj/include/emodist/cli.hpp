// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emodist {

/// Entry point behind the emodist binary. `args` excludes the program name.
/// Returns 0 on success, 2 on usage errors, 1 on runtime failures (with a
/// diagnostic on err).
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace emodist
