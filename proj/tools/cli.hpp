#ifndef BZF_TOOLS_CLI_HPP_
#define BZF_TOOLS_CLI_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string
#include <vector>  // for vector

namespace bzf::cli {

  // Exit codes.
  inline constexpr int ok        = 0;
  inline constexpr int violated  = 1;  // a checked property failed
  inline constexpr int bad_input = 2;  // usage, parse or range error

  //! Runs the command line tool on \p args (without the program name).
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace bzf::cli

#endif  // BZF_TOOLS_CLI_HPP_
