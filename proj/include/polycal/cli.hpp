#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace polycal::cli {

/// Runs the command-line interface. Exit codes: 0 success (and no Mismatch
/// verdicts), 1 at least one Mismatch, 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polycal::cli
