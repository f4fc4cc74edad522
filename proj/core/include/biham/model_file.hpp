/*
 * model_file.hpp
 * --------------
 * Line-oriented model file format:
 *
 *   # comment
 *   name = volterra-5        (optional)
 *   dim = 5
 *   coords = x1,x2,x3,x4,x5
 *   P[1][2] = x1*x2
 *   Q[1][3] = x1*x2*x3
 *
 * Entry indices are 1-based with i < j; expressions follow the grammar in
 * parse.hpp. 'dim' and 'coords' must precede entries.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biham/tensor.hpp"

namespace biham {

struct ModelFile {
    struct Entry {
        char tensor;     // 'P' or 'Q'
        int i, j;        // 1-based, i < j
        std::string expr;
        bool operator==(const Entry&) const = default;
    };

    int dim = 0;
    std::vector<std::string> coords;
    std::string name; // optional
    std::vector<Entry> entries;

    bool operator==(const ModelFile&) const = default;

    // Throws ModelFileError with a 1-based line number.
    static ModelFile parse(std::istream& in);
    static ModelFile parse_string(const std::string& text);

    std::string serialize() const;

    // Parses every entry expression; throws ModelFileError on bad entries.
    Pencil instantiate() const;

    Chart chart() const;

    static ModelFile from_pencil(const Pencil& pencil, std::string name);
};

} // namespace biham
