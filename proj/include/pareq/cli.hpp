#ifndef PAREQ_CLI_HPP
#define PAREQ_CLI_HPP

namespace pareq {

// Command-line front end over the library. Reads JSON documents from file
// arguments, writes results to stdout. Exit codes: 0 on success, 1 when a
// verification finds differing letter-count images, 2 on malformed input
// or usage errors.
int cli_main(int argc, const char* const* argv);

}  // namespace pareq

#endif
