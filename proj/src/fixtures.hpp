#pragma once

#include "serialize.hpp"

namespace flagcodes {

/// Builds the named built-in example instantiated over F_q (q = 0 selects
/// the fixture's default, 2 for prime-field examples and 4 for the
/// semilinear one). UnknownFixture for unrecognized names.
Document fixture(const std::string& name, unsigned q = 0);

std::vector<std::string> fixture_names();

} // namespace flagcodes
