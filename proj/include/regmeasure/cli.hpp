// Command-line front end. Kept in the library so tests can drive it in-process.

#ifndef REGMEASURE_CLI_HPP
#define REGMEASURE_CLI_HPP

#include <iosfwd>
#include <string>

#include "regmeasure/automata.hpp"
#include "regmeasure/checks.hpp"

namespace regmeasure::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, resource = 3 };

/// Resolves --dfa: a built-in (modk:k, evens, starts:x, ends:x, astar, empty,
/// all) over the given alphabet, otherwise a path to a DFA JSON document.
Dfa load_dfa(const std::string& source, const std::string& alphabet);

/// Runs the command line. `checks` lets tests swap the density engine used by
/// the check subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const CheckOptions& checks = CheckOptions());

}  // namespace regmeasure::cli

#endif  // REGMEASURE_CLI_HPP
