/**
 * @file cli.hpp
 * @brief Command-line entry point, callable in-process for tests.
 *
 * Exit codes: 0 PASS, 1 parse or input error, 2 verification mismatch.
 */
#ifndef SEIFERT_CLI_CLI_HPP
#define SEIFERT_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace seifert::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seifert::cli

#endif
