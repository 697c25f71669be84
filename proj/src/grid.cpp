#include "steklov/grid.hpp"

#include <stdexcept>

namespace steklov {

Grid parse_grid(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw std::invalid_argument("grid must look like NxM, got '" + text + "'");
    Grid g;
    try {
        std::size_t used = 0;
        g.n_t = std::stoi(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument("");
        const std::string rest = text.substr(x + 1);
        g.n_theta = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must look like NxM, got '" + text + "'");
    }
    if (g.n_t < 1 || g.n_theta < 1) throw std::invalid_argument("grid sizes must be positive");
    return g;
}

}  // namespace steklov
