#include "biham/model_file.hpp"

#include <sstream>

#include "biham/parse.hpp"

namespace biham {

namespace {

std::string strip(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// "P[i][j]" -> (tensor, i, j)
bool parse_entry_key(const std::string& key, char* tensor, int* i, int* j)
{
    if (key.size() < 7 || (key[0] != 'P' && key[0] != 'Q') || key[1] != '[') return false;
    std::size_t c1 = key.find(']', 2);
    if (c1 == std::string::npos || c1 + 1 >= key.size() || key[c1 + 1] != '[' || key.back() != ']')
        return false;
    try {
        *i = std::stoi(key.substr(2, c1 - 2));
        *j = std::stoi(key.substr(c1 + 2, key.size() - c1 - 3));
    } catch (...) {
        return false;
    }
    *tensor = key[0];
    return true;
}

} // namespace

ModelFile ModelFile::parse(std::istream& in)
{
    ModelFile model;
    bool have_dim = false, have_coords = false;
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<char, std::pair<int, int>>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ModelFileError("expected 'key = value'", lineno);
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key.empty()) throw ModelFileError("empty key", lineno);

        if (key == "dim") {
            try {
                model.dim = std::stoi(value);
            } catch (...) {
                throw ModelFileError("dim must be an integer", lineno);
            }
            if (model.dim <= 0) throw ModelFileError("dim must be positive", lineno);
            have_dim = true;
            continue;
        }
        if (key == "coords") {
            std::stringstream ss(value);
            std::string namepart;
            while (std::getline(ss, namepart, ',')) {
                namepart = strip(namepart);
                if (namepart.empty()) throw ModelFileError("empty coordinate name", lineno);
                model.coords.push_back(namepart);
            }
            have_coords = true;
            continue;
        }
        if (key == "name") {
            model.name = value;
            continue;
        }

        char tensor;
        int i, j;
        if (!parse_entry_key(key, &tensor, &i, &j))
            throw ModelFileError("unrecognized key '" + key + "'", lineno);
        if (!have_dim || !have_coords)
            throw ModelFileError("dim and coords must appear before entries", lineno);
        if (!(1 <= i && i < j && j <= model.dim))
            throw ModelFileError("entry indices must satisfy 1 <= i < j <= dim", lineno);
        for (auto& [t, ij] : seen)
            if (t == tensor && ij == std::make_pair(i, j))
                throw ModelFileError("duplicate entry " + key, lineno);
        seen.push_back({tensor, {i, j}});
        if (value.empty()) throw ModelFileError("entry has no expression", lineno);
        model.entries.push_back({tensor, i, j, value});
    }
    if (!have_dim) throw ModelFileError("missing 'dim'", lineno == 0 ? 1 : lineno);
    if (!have_coords) throw ModelFileError("missing 'coords'", lineno == 0 ? 1 : lineno);
    if (static_cast<int>(model.coords.size()) != model.dim)
        throw ModelFileError("coords lists " + std::to_string(model.coords.size()) +
                                 " names for dim " + std::to_string(model.dim),
                             lineno);
    return model;
}

ModelFile ModelFile::parse_string(const std::string& text)
{
    std::istringstream in(text);
    return parse(in);
}

std::string ModelFile::serialize() const
{
    std::ostringstream out;
    if (!name.empty()) out << "name = " << name << "\n";
    out << "dim = " << dim << "\n";
    out << "coords = ";
    for (std::size_t k = 0; k < coords.size(); ++k) out << (k ? "," : "") << coords[k];
    out << "\n";
    for (const Entry& e : entries)
        out << e.tensor << "[" << e.i << "][" << e.j << "] = " << e.expr << "\n";
    return out.str();
}

Chart ModelFile::chart() const
{
    return Chart(dim, coords);
}

Pencil ModelFile::instantiate() const
{
    Chart c = chart();
    SkewBivector p(c), q(c);
    for (const Entry& e : entries) {
        RationalFunction value;
        try {
            value = to_rational(parse_expr(e.expr, c));
        } catch (const Error& err) {
            throw Error(std::string(1, e.tensor) + "[" + std::to_string(e.i) + "][" +
                        std::to_string(e.j) + "]: " + err.what());
        }
        if (e.tensor == 'P')
            p.set_entry(e.i - 1, e.j - 1, std::move(value));
        else
            q.set_entry(e.i - 1, e.j - 1, std::move(value));
    }
    return Pencil(std::move(p), std::move(q));
}

ModelFile ModelFile::from_pencil(const Pencil& pencil, std::string name)
{
    ModelFile model;
    model.dim = pencil.chart().dim;
    model.coords = pencil.chart().coordinate_names;
    model.name = std::move(name);
    for (auto& [ij, f] : pencil.P.upper_entries())
        model.entries.push_back({'P', ij.first + 1, ij.second + 1,
                                 to_string(f, pencil.chart().coordinate_names)});
    for (auto& [ij, f] : pencil.Q.upper_entries())
        model.entries.push_back({'Q', ij.first + 1, ij.second + 1,
                                 to_string(f, pencil.chart().coordinate_names)});
    return model;
}

} // namespace biham
