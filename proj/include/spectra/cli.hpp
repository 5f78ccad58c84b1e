#pragma once

#include <iosfwd>

namespace spectra {

// Exit codes: 0 success/pass, 1 theorem failed or inapplicable, 2 usage or
// input error, 3 budget exhausted.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace spectra
