// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_CLI_HPP_
#define FRAMOID_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace framoid::cli {

  //! Process exit codes.
  enum ExitCode : int {
    ok          = 0,  //!< success, every check passed
    mismatch    = 1,  //!< a verification or count did not match
    usage       = 2,  //!< bad arguments
    cap_reached = 3   //!< an enumeration exceeded --cap
  };

  //! Runs the command line \p args (without the program name), writing
  //! results to \p out and diagnostics to \p err.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  //! As above for main's arguments, on std::cout and std::cerr.
  int run(int argc, char const* const* argv);

}  // namespace framoid::cli

#endif  // FRAMOID_CLI_HPP_
