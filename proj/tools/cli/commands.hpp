#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypcert/rational.hpp"

namespace hypcert::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kInputError = 3 };

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Number of monomials of degree k in three variables, by enumeration.
Integer count_monomials(long k);

/// sum_{m>=1} h^0(O(aN - m)) / (N h^0(O(aN))) on the plane, from monomial counts.
Rational plane_beta_ratio(long a, long n);

}  // namespace hypcert::cli
