#pragma once

#include <cstdint>

namespace alspec {

/// Complex-arithmetic tally for one transform. Kernels only ever add to it;
/// callers reset between transforms.
struct OpCounter {
    std::int64_t complex_mults = 0;
    std::int64_t complex_adds = 0;
    /// Deepest recursion level reached (0 = the top-level call).
    int deepest_level = 0;

    void reset() noexcept { *this = OpCounter{}; }
};

}  // namespace alspec
