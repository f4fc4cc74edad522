#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biham/errors.hpp"

namespace biham {

// A coordinate chart: the manifold dimension together with the ordered
// coordinate names. Indices are 0-based internally; model files and
// reports use 1-based indices.
struct Chart {
    int dim = 0;
    std::vector<std::string> coordinate_names;

    Chart() = default;
    Chart(int dimension, std::vector<std::string> names);

    // x1..xn
    static Chart standard(int dimension);

    std::optional<int> index_of(const std::string& name) const;

    // Chart extended by one formal coordinate (used for the pencil
    // parameter). The new name is derived from `hint` and guaranteed unique.
    Chart extended(const std::string& hint = "lam") const;

    bool operator==(const Chart&) const = default;
};

} // namespace biham
