#include "biham/report.hpp"

#include <sstream>

#include <json.hpp>

namespace biham {

using nlohmann::json;

// ------------------------------------------------------------- JSON codecs

namespace {

json to_json(const WitnessDoc& w)
{
    return json{{"indices", w.indices}, {"value", w.value}};
}

WitnessDoc witness_from_json(const json& j)
{
    WitnessDoc w;
    w.indices = j.at("indices").get<std::vector<int>>();
    w.value = j.at("value").get<std::string>();
    return w;
}

json to_json(const CheckDoc& c)
{
    json j{{"ok", c.ok}};
    if (c.witness) j["witness"] = to_json(*c.witness);
    return j;
}

CheckDoc check_from_json(const json& j)
{
    CheckDoc c;
    c.ok = j.at("ok").get<bool>();
    if (j.contains("witness")) c.witness = witness_from_json(j.at("witness"));
    return c;
}

json to_json(const GenericityDoc& g)
{
    return json{{"generic", g.generic},
                {"gcd_finite", g.gcd_finite},
                {"infinity_ok", g.infinity_ok},
                {"deleted_pfaffians", g.deleted_pfaffians},
                {"degenerate_locus", g.degenerate_locus}};
}

GenericityDoc genericity_from_json(const json& j)
{
    GenericityDoc g;
    g.generic = j.at("generic").get<bool>();
    g.gcd_finite = j.at("gcd_finite").get<std::string>();
    g.infinity_ok = j.at("infinity_ok").get<bool>();
    g.deleted_pfaffians = j.at("deleted_pfaffians").get<std::vector<std::string>>();
    g.degenerate_locus = j.at("degenerate_locus").get<std::string>();
    return g;
}

json to_json(const DensityDoc& d)
{
    json terms = json::array();
    for (auto& [f, e] : d.log_terms) terms.push_back(json{{"factor", f}, {"exponent", e}});
    return json{{"rational_part", d.rational_part}, {"log_terms", terms}};
}

DensityDoc density_from_json(const json& j)
{
    DensityDoc d;
    d.rational_part = j.at("rational_part").get<std::string>();
    for (auto& t : j.at("log_terms"))
        d.log_terms.emplace_back(t.at("factor").get<std::string>(), t.at("exponent").get<std::string>());
    return d;
}

json to_json(const VolumeDoc& v)
{
    json j{{"log_derivative", v.log_derivative}};
    if (v.explicit_density) j["explicit_density"] = to_json(*v.explicit_density);
    return j;
}

VolumeDoc volume_from_json(const json& j)
{
    VolumeDoc v;
    v.log_derivative = j.at("log_derivative").get<std::vector<std::string>>();
    if (j.contains("explicit_density")) v.explicit_density = density_from_json(j.at("explicit_density"));
    return v;
}

json to_json(const SolverDoc& s)
{
    return json{{"status", s.status},
                {"witness_equation", s.witness_equation},
                {"witness_residue", s.witness_residue},
                {"free_column", s.free_column}};
}

SolverDoc solver_from_json(const json& j)
{
    SolverDoc s;
    s.status = j.at("status").get<std::string>();
    s.witness_equation = j.at("witness_equation").get<int>();
    s.witness_residue = j.at("witness_residue").get<std::string>();
    s.free_column = j.at("free_column").get<int>();
    return s;
}

json to_json(const CasimirDoc& c)
{
    return json{{"kernel_ok", c.kernel_ok},
                {"closed_ok", c.closed_ok},
                {"nonvanishing_ok", c.nonvanishing_ok},
                {"degree", c.degree},
                {"samples", c.samples},
                {"sampled_lambdas", c.sampled_lambdas}};
}

CasimirDoc casimir_from_json(const json& j)
{
    CasimirDoc c;
    c.kernel_ok = j.at("kernel_ok").get<bool>();
    c.closed_ok = j.at("closed_ok").get<bool>();
    c.nonvanishing_ok = j.at("nonvanishing_ok").get<bool>();
    c.degree = j.at("degree").get<int>();
    c.samples = j.at("samples").get<int>();
    c.sampled_lambdas = j.at("sampled_lambdas").get<std::vector<std::string>>();
    return c;
}

json to_json(const BasisDoc& b)
{
    return json{{"dim", b.dim}, {"matrix", b.matrix}};
}

BasisDoc basis_from_json(const json& j)
{
    BasisDoc b;
    b.dim = j.at("dim").get<int>();
    b.matrix = j.at("matrix").get<std::vector<std::vector<std::string>>>();
    return b;
}

} // namespace

std::string ReportDocument::to_json_string() const
{
    json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["model_name"] = model_name;
    j["dim"] = dim;
    j["coords"] = coords;
    j["point"] = point;
    j["verdict"] = verdict;
    if (poisson_p) j["poisson_p"] = to_json(*poisson_p);
    if (poisson_q) j["poisson_q"] = to_json(*poisson_q);
    if (compatibility) j["compatibility"] = to_json(*compatibility);
    if (genericity) j["genericity"] = to_json(*genericity);
    if (solver) j["solver"] = to_json(*solver);
    if (alpha) j["alpha"] = *alpha;
    if (alpha_closed) j["alpha_closed"] = *alpha_closed;
    if (closedness_witness) j["closedness_witness"] = to_json(*closedness_witness);
    if (volume) j["volume"] = to_json(*volume);
    if (casimir) j["casimir"] = to_json(*casimir);
    if (basis) j["basis"] = to_json(*basis);
    j["notes"] = notes;
    return j.dump(2);
}

ReportDocument ReportDocument::from_json_string(const std::string& text)
{
    json j = json::parse(text);
    ReportDocument d;
    d.schema_version = j.at("schema_version").get<int>();
    d.command = j.at("command").get<std::string>();
    d.model_name = j.at("model_name").get<std::string>();
    d.dim = j.at("dim").get<int>();
    d.coords = j.at("coords").get<std::vector<std::string>>();
    d.point = j.at("point").get<std::vector<std::string>>();
    d.verdict = j.at("verdict").get<std::string>();
    if (j.contains("poisson_p")) d.poisson_p = check_from_json(j.at("poisson_p"));
    if (j.contains("poisson_q")) d.poisson_q = check_from_json(j.at("poisson_q"));
    if (j.contains("compatibility")) d.compatibility = check_from_json(j.at("compatibility"));
    if (j.contains("genericity")) d.genericity = genericity_from_json(j.at("genericity"));
    if (j.contains("solver")) d.solver = solver_from_json(j.at("solver"));
    if (j.contains("alpha")) d.alpha = j.at("alpha").get<std::vector<std::string>>();
    if (j.contains("alpha_closed")) d.alpha_closed = j.at("alpha_closed").get<bool>();
    if (j.contains("closedness_witness"))
        d.closedness_witness = witness_from_json(j.at("closedness_witness"));
    if (j.contains("volume")) d.volume = volume_from_json(j.at("volume"));
    if (j.contains("casimir")) d.casimir = casimir_from_json(j.at("casimir"));
    if (j.contains("basis")) d.basis = basis_from_json(j.at("basis"));
    d.notes = j.at("notes").get<std::vector<std::string>>();
    return d;
}

// ---------------------------------------------------------- human renderer

namespace {

std::string yesno(bool b)
{
    return b ? "yes" : "no";
}

void render_check(std::ostream& out, const std::string& label, const CheckDoc& c)
{
    out << label << ": " << yesno(c.ok);
    if (c.witness) {
        out << "  [witness (";
        for (std::size_t k = 0; k < c.witness->indices.size(); ++k)
            out << (k ? "," : "") << c.witness->indices[k];
        out << ") = " << c.witness->value << "]";
    }
    out << "\n";
}

} // namespace

std::string ReportDocument::to_human_string() const
{
    std::ostringstream out;
    out << "command: " << command << "\n";
    if (!model_name.empty()) out << "model: " << model_name << "\n";
    out << "dim: " << dim << "\n";
    if (!point.empty()) {
        out << "point: (";
        for (std::size_t k = 0; k < point.size(); ++k) out << (k ? ", " : "") << point[k];
        out << ")\n";
    }
    if (poisson_p) render_check(out, "P Poisson", *poisson_p);
    if (poisson_q) render_check(out, "Q Poisson", *poisson_q);
    if (compatibility) render_check(out, "compatible", *compatibility);
    if (genericity) {
        out << "generic at point: " << yesno(genericity->generic) << "  [gcd = "
            << genericity->gcd_finite << ", infinity ok: " << yesno(genericity->infinity_ok);
        if (!genericity->degenerate_locus.empty())
            out << ", locus: " << genericity->degenerate_locus;
        out << "]\n";
    }
    if (solver) {
        out << "solver: " << solver->status;
        if (solver->witness_equation >= 0)
            out << "  [equation " << solver->witness_equation + 1 << ", residue "
                << solver->witness_residue << "]";
        if (solver->free_column >= 0) out << "  [free component " << solver->free_column + 1 << "]";
        out << "\n";
    }
    if (alpha) {
        out << "alpha:";
        bool all_zero = true;
        for (std::size_t k = 0; k < alpha->size(); ++k) {
            if ((*alpha)[k] == "0") continue;
            all_zero = false;
            out << "\n  [" << coords[k] << "] " << (*alpha)[k];
        }
        if (all_zero) out << " 0";
        out << "\n";
    }
    if (alpha_closed) out << "d(alpha) = 0: " << yesno(*alpha_closed) << "\n";
    if (closedness_witness) {
        out << "closedness witness: (";
        for (std::size_t k = 0; k < closedness_witness->indices.size(); ++k)
            out << (k ? "," : "") << closedness_witness->indices[k];
        out << ") = " << closedness_witness->value << "\n";
    }
    if (volume) {
        if (volume->explicit_density) {
            std::vector<std::string> parts;
            if (volume->explicit_density->rational_part != "0")
                parts.push_back("exp(" + volume->explicit_density->rational_part + ")");
            for (auto& [f, e] : volume->explicit_density->log_terms)
                parts.push_back("(" + f + ")^(" + e + ")");
            out << "density: ";
            if (parts.empty())
                out << "1";
            else
                for (std::size_t k = 0; k < parts.size(); ++k) out << (k ? " * " : "") << parts[k];
            out << "\n";
        } else {
            out << "density: implicit (defined by d(log density) = alpha)\n";
        }
    }
    if (casimir) {
        out << "casimir certificate: kernel " << yesno(casimir->kernel_ok) << ", closed "
            << yesno(casimir->closed_ok) << ", nonvanishing " << yesno(casimir->nonvanishing_ok)
            << ", degree " << casimir->degree << " (" << casimir->samples << " lambda samples)\n";
    }
    if (basis) {
        out << "basis change T (columns are the new basis):\n";
        for (const auto& row : basis->matrix) {
            out << "  [";
            for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k];
            out << "]\n";
        }
    }
    for (const auto& note : notes) out << "note: " << note << "\n";
    out << "verdict: " << verdict << "\n";
    return out.str();
}

// ---------------------------------------------------------------- builders

std::vector<std::string> render_components(const OneForm& form)
{
    std::vector<std::string> out;
    for (const RationalFunction& c : form.components)
        out.push_back(to_string(c, form.chart.coordinate_names));
    return out;
}

namespace {

WitnessDoc witness_doc(const SchoutenWitness& w, const Chart& chart)
{
    WitnessDoc doc;
    doc.indices = {w.i + 1, w.j + 1, w.k + 1};
    doc.value = to_string(w.value, chart.coordinate_names);
    return doc;
}

CheckDoc check_doc(bool ok, const std::optional<SchoutenWitness>& w, const Chart& chart)
{
    CheckDoc doc;
    doc.ok = ok;
    if (w) doc.witness = witness_doc(*w, chart);
    return doc;
}

std::vector<std::string> render_point(std::span<const Rational> point)
{
    std::vector<std::string> out;
    for (const Rational& r : point) out.push_back(rat_to_string(r));
    return out;
}

void fill_model(ReportDocument& doc, const ModelFile& model)
{
    doc.model_name = model.name;
    doc.dim = model.dim;
    doc.coords = model.coords;
}

} // namespace

GenericityDoc genericity_doc(const GenericityCertificate& cert)
{
    GenericityDoc doc;
    doc.generic = cert.generic();
    doc.gcd_finite = cert.gcd_finite.to_string();
    doc.infinity_ok = cert.infinity_ok;
    for (const auto& p : cert.deleted_pfaffians) doc.deleted_pfaffians.push_back(p.to_string());
    if (!cert.generic() && !cert.degenerate_locus().is_zero())
        doc.degenerate_locus = cert.degenerate_locus().to_string();
    return doc;
}

ReportDocument make_check_report(const ModelFile& model, const PoissonCheck& p,
                                 const PoissonCheck& q, const CompatibilityCheck& c)
{
    ReportDocument doc;
    doc.command = "check";
    fill_model(doc, model);
    Chart chart = model.chart();
    doc.poisson_p = check_doc(p.ok, p.witness, chart);
    doc.poisson_q = check_doc(q.ok, q.witness, chart);
    doc.compatibility = check_doc(c.ok, c.witness, chart);
    doc.verdict = (p.ok && q.ok && c.ok) ? "pass" : "fail";
    return doc;
}

ReportDocument make_flatness_report(const ModelFile& model, const FlatnessReport& report)
{
    ReportDocument doc;
    doc.command = "flatness";
    fill_model(doc, model);
    Chart chart = model.chart();
    doc.point = render_point(report.point);
    doc.verdict = to_string(report.verdict);
    doc.poisson_p = check_doc(report.poisson_p.ok, report.poisson_p.witness, chart);
    if (report.verdict != FlatnessVerdict::NotPoisson || report.poisson_p.ok)
        doc.poisson_q = check_doc(report.poisson_q.ok, report.poisson_q.witness, chart);
    if (report.compatibility.ok || report.compatibility.witness)
        doc.compatibility = check_doc(report.compatibility.ok, report.compatibility.witness, chart);
    if (report.genericity) doc.genericity = genericity_doc(*report.genericity);
    if (report.solution) {
        SolverDoc s;
        switch (report.solution->status) {
        case AlphaSolution::Status::Unique: s.status = "unique"; break;
        case AlphaSolution::Status::Inconsistent: s.status = "inconsistent"; break;
        case AlphaSolution::Status::Underdetermined: s.status = "underdetermined"; break;
        }
        s.witness_equation = report.solution->witness_equation;
        if (report.solution->status == AlphaSolution::Status::Inconsistent)
            s.witness_residue = to_string(report.solution->witness_residue, chart.coordinate_names);
        s.free_column = report.solution->free_column;
        doc.solver = std::move(s);
    }
    if (report.alpha) doc.alpha = render_components(*report.alpha);
    if (report.closedness) {
        doc.alpha_closed = report.closedness->closed;
        if (!report.closedness->closed) {
            WitnessDoc w;
            w.indices = {report.closedness->i + 1, report.closedness->j + 1};
            w.value = to_string(report.closedness->witness, chart.coordinate_names);
            doc.closedness_witness = std::move(w);
        }
    }
    if (report.volume) {
        VolumeDoc v;
        v.log_derivative = render_components(report.volume->log_derivative);
        if (report.volume->explicit_density) {
            DensityDoc d;
            d.rational_part =
                to_string(report.volume->explicit_density->rational_part, chart.coordinate_names);
            for (auto& [q_, c_] : report.volume->explicit_density->log_terms)
                d.log_terms.emplace_back(to_string(q_, chart.coordinate_names), rat_to_string(c_));
            v.explicit_density = std::move(d);
        }
        doc.volume = std::move(v);
    }
    doc.notes = report.notes;
    return doc;
}

ReportDocument make_generic_report(const ModelFile& model, const GenericityCertificate& cert,
                                   std::span<const Rational> point)
{
    ReportDocument doc;
    doc.command = "generic";
    fill_model(doc, model);
    doc.point = render_point(point);
    doc.genericity = genericity_doc(cert);
    doc.verdict = cert.generic() ? "generic" : "degenerate";
    return doc;
}

ReportDocument make_casimir_report(const ModelFile& model, const CasimirCertificate& cert)
{
    ReportDocument doc;
    doc.command = "casimir";
    fill_model(doc, model);
    doc.point = render_point(cert.point);
    CasimirDoc c;
    c.kernel_ok = cert.kernel_ok;
    c.closed_ok = cert.closed_ok;
    c.nonvanishing_ok = cert.nonvanishing_ok;
    c.degree = cert.degree;
    c.samples = cert.samples;
    for (const Rational& l : cert.sampled_lambdas) c.sampled_lambdas.push_back(rat_to_string(l));
    doc.casimir = std::move(c);
    doc.verdict = cert.valid() ? "valid" : "invalid";
    return doc;
}

ReportDocument make_jk_report(const ModelFile& model, const CanonicalBasisChange& basis,
                              std::span<const Rational> point)
{
    ReportDocument doc;
    doc.command = "jk";
    fill_model(doc, model);
    doc.point = render_point(point);
    BasisDoc b;
    b.dim = basis.dim;
    for (int i = 0; i < basis.dim; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < basis.dim; ++j) row.push_back(rat_to_string(basis.T.at(i, j)));
        b.matrix.push_back(std::move(row));
    }
    doc.basis = std::move(b);
    doc.verdict = "verified";
    return doc;
}

} // namespace biham
