#pragma once

#include <cstdint>
#include <string>

namespace defkit {

/// Resource budget and run options. DEFKIT_BUDGET (comma-separated k=v:
/// max-basis, max-sat, jet-cap, chart-cap) seeds the defaults; explicit
/// flags passed by callers win over the environment.
struct RunConfig {
    std::size_t max_basis = 100000;   // standard-basis element cap
    int max_saturation_iters = 64;    // ideal-quotient iterations
    std::uint32_t jet_cap = 64;       // jet-truncation degree budget
    std::uint64_t seed = 0;
    std::string format = "text";      // text | json
    unsigned resolution_cap = 3;      // max n for resolve an
    bool parallel = true;             // use OpenMP kernels

    /// Defaults with DEFKIT_BUDGET applied.
    static RunConfig defaults();
};

} // namespace defkit
