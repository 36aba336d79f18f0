#pragma once

#include <iosfwd>

namespace recamp::cli {

// Exit codes: 0 yes/ok, 1 no/invalid, 2 usage or input error, 3 resource limit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recamp::cli
