#pragma once

#include <string>

#include "msod/action.hpp"

namespace msod::presets {

/// A^n with mu_2^k, generator i negating coordinate i (k <= n).
ActionSpec etale(int n, int k);
/// P^n with mu_2^n negating the first n homogeneous coordinates.
ActionSpec pn_full(int n);
/// P^2 with mu_2^2 on [x:y:z] negating x and y.
ActionSpec p2_example();
/// Fermat quadric of dimension q in P^{q+1}, mu_2^{q+1} on the first q+1 coordinates.
ActionSpec quadric(int q_dim);

struct PresetArgs {
    int n = -1;
    int k = -1;
    int q_dim = -1;
};

/// Names: etale, p2-example, pn-full, quadric. Throws InputError.
ActionSpec by_name(const std::string& name, const PresetArgs& args);

}  // namespace msod::presets
