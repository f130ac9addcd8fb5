#ifndef FARSWARM_CLI_HPP
#define FARSWARM_CLI_HPP

namespace farswarm {

// Subcommands: run, ensemble, analyze, render. Returns 0 on success, 1 on
// configuration / usage errors, 2 on runtime errors.
int cli_main(int argc, const char* const* argv);

}  // namespace farswarm

#endif
