#include "confcohom/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace confcohom {

namespace {

Limits load_limits() {
    Limits l;
    if (const char* env = std::getenv("CONFCOHOM_MAX_M")) {
        try {
            int v = std::clamp(std::stoi(env), 1, 14);
            l.max_cycle_m = v;
            l.max_set_partition_m = v;
            l.max_oracle_m = v;
            l.max_theta_depth = v;
        } catch (const std::exception&) {
            // malformed value: keep defaults
        }
    }
    return l;
}

}  // namespace

const Limits& limits() {
    static const Limits l = load_limits();
    return l;
}

}  // namespace confcohom
