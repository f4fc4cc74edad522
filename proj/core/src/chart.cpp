#include "biham/chart.hpp"

#include <algorithm>
#include <set>

namespace biham {

Chart::Chart(int dimension, std::vector<std::string> names)
    : dim(dimension), coordinate_names(std::move(names))
{
    if (dim <= 0) throw Error("chart dimension must be positive");
    if (static_cast<int>(coordinate_names.size()) != dim)
        throw Error("chart has " + std::to_string(coordinate_names.size()) +
                    " coordinate names for dimension " + std::to_string(dim));
    std::set<std::string> seen(coordinate_names.begin(), coordinate_names.end());
    if (static_cast<int>(seen.size()) != dim)
        throw Error("chart coordinate names are not unique");
}

Chart Chart::standard(int dimension)
{
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(dimension));
    for (int i = 1; i <= dimension; ++i) names.push_back("x" + std::to_string(i));
    return Chart(dimension, std::move(names));
}

std::optional<int> Chart::index_of(const std::string& name) const
{
    auto it = std::find(coordinate_names.begin(), coordinate_names.end(), name);
    if (it == coordinate_names.end()) return std::nullopt;
    return static_cast<int>(it - coordinate_names.begin());
}

Chart Chart::extended(const std::string& hint) const
{
    std::string name = hint;
    while (index_of(name)) name += "_";
    std::vector<std::string> names = coordinate_names;
    names.push_back(name);
    return Chart(dim + 1, std::move(names));
}

} // namespace biham
