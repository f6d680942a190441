#pragma once

#include <cstdint>
#include <vector>

#include "nestedasp/options.hpp"
#include "nestedasp/report.hpp"

namespace nasp {

// Golden examples as golden checks, followed by seeded random
// cross-checks of the two answer-set characterizations.
std::vector<SelftestCase> runSelftest(std::uint64_t seed, const Options& options = {});

}  // namespace nasp
