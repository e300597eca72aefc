#pragma once

namespace confcohom {

// Enumeration caps. Read once from CONFCOHOM_MAX_M (clamped to 14) when set.
struct Limits {
    int max_cycle_m = 12;        // cycle-type indexed computations, character tables
    int max_set_partition_m = 12;
    int max_oracle_m = 10;       // set-partition based oracles
    int max_theta_depth = 12;    // m - l in iterated induction
    long long max_closure = 3628800;  // 10!
};

const Limits& limits();

}  // namespace confcohom
