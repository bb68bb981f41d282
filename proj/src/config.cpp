#include "defkit/config.hpp"

#include <cstdlib>
#include <sstream>

namespace defkit {

RunConfig RunConfig::defaults() {
    RunConfig cfg;
    const char* env = std::getenv("DEFKIT_BUDGET");
    if (!env) return cfg;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long long val = std::atoll(item.c_str() + eq + 1);
        if (val <= 0) continue;
        if (key == "max-basis") cfg.max_basis = static_cast<std::size_t>(val);
        else if (key == "max-sat") cfg.max_saturation_iters = static_cast<int>(val);
        else if (key == "jet-cap") cfg.jet_cap = static_cast<std::uint32_t>(val);
        else if (key == "chart-cap") cfg.resolution_cap = static_cast<unsigned>(val);
    }
    return cfg;
}

} // namespace defkit
