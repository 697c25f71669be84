#pragma once

#include <string>

namespace steklov {

/// Parameter grid resolution: intervals across t, nodes around θ.
struct Grid {
    int n_t = 64;
    int n_theta = 128;
};

/// Parses "NxM" into {N, M}; throws std::invalid_argument otherwise.
Grid parse_grid(const std::string& text);

}  // namespace steklov
