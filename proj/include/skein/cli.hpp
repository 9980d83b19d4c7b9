#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skein::cli {

/// Run one command line (without the program name).  The document goes to
/// `out`, diagnostics to `err`.  Returns 0 on success, 1 when a verification
/// fails and 2 on a usage error.  `default_format` applies when --format is
/// not given; an empty string means json.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::string& default_format = "");

}  // namespace skein::cli
