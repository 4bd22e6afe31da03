#pragma once

namespace matkern {

// Entry point for the matkern tool; returns the process exit code
// (0 ok / verification clean, 1 failure, 2 budget refusal).
int cli_main(int argc, const char* const* argv);

}  // namespace matkern
