#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qred/algebra.hpp"

namespace qred {

namespace exit_code {
inline constexpr int holds = 0;
inline constexpr int fails = 1;
inline constexpr int usage = 2;
inline constexpr int inconclusive = 3;
} // namespace exit_code

/// Resolves an algebra reference: an existing file path, or a fixture name
/// such as FIX-A44 looked up as fix-a44.alg in `fixture_dir`.
AlgebraHandle load_algebra(const std::string &ref, const std::string &fixture_dir, std::size_t degree_bound = 64);

/// QRED_FIXTURE_DIR if set, otherwise the fixture directory of the source tree.
std::string default_fixture_dir();

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qred
