#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shlin/linalg.hpp"
#include "shlin/shset.hpp"

namespace shlin::cli {

// Runs one command line (without the program name). Exit status: 0 for
// success and positive verdicts, 1 for negative verdicts, 2 for usage and
// input errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// $SHLIN_SNAPSHOT if set, else the snapshot shipped in fixtures/.
std::string default_snapshot_path();

// `coef*index + coef*index ...`, indices 0-based.
std::string format_combination(const HCombination& c);
// Element codes separated by single spaces.
std::string format_vector(const FqVector& v);

}  // namespace shlin::cli
