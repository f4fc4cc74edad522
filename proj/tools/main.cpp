// biham: decide whether a bihamiltonian structure given in coordinates is
// flat, via the unimodularity criterion. Exit codes: 0 = positive verdict,
// 1 = negative verdict, 2 = input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "biham/casimir.hpp"
#include "biham/model_file.hpp"
#include "biham/models.hpp"
#include "biham/report.hpp"
#include "biham/unimod.hpp"

namespace {

using namespace biham;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

ModelFile load_model(const std::string& path)
{
    if (path == "-") return ModelFile::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file '" + path + "'");
    return ModelFile::parse(in);
}

std::vector<Rational> parse_point(const std::string& text, int dim)
{
    std::vector<Rational> point;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) point.push_back(rat_from_string(part));
    if (static_cast<int>(point.size()) != dim)
        throw Error("--point lists " + std::to_string(point.size()) + " values for dimension " +
                    std::to_string(dim));
    return point;
}

// Distinct small primes dodge the coordinate hyperplanes that commonly
// carry denominator zeros.
std::vector<Rational> default_point(int dim)
{
    std::vector<Rational> point;
    int candidate = 2;
    while (static_cast<int>(point.size()) < dim) {
        bool prime = true;
        for (int d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) prime = false;
        if (prime) point.emplace_back(candidate);
        ++candidate;
    }
    return point;
}

std::vector<Rational> resolve_point(const std::string& point_text, int dim)
{
    return point_text.empty() ? default_point(dim) : parse_point(point_text, dim);
}

void emit(const ReportDocument& doc, const std::string& format)
{
    if (format == "machine")
        std::cout << doc.to_json_string() << "\n";
    else
        std::cout << doc.to_human_string();
}

int run_check(const std::string& model_path, const std::string& format)
{
    ModelFile model = load_model(model_path);
    Pencil pencil = model.instantiate();
    PoissonCheck p = is_poisson(pencil.P);
    PoissonCheck q = is_poisson(pencil.Q);
    CompatibilityCheck c = (p.ok && q.ok) ? is_compatible(pencil.P, pencil.Q)
                                          : CompatibilityCheck{false, std::nullopt};
    ReportDocument doc = make_check_report(model, p, q, c);
    if (!(p.ok && q.ok) && !c.witness)
        doc.notes.push_back("compatibility not evaluated: a member fails the Jacobi identity");
    emit(doc, format);
    return (p.ok && q.ok && c.ok) ? kExitPositive : kExitNegative;
}

int run_flatness(const std::string& model_path, const std::string& point_text,
                 const std::string& format, int perturb)
{
    ModelFile model = load_model(model_path);
    Pencil pencil = model.instantiate();
    std::vector<Rational> point = resolve_point(point_text, model.dim);
    FlatnessOptions options;
    options.debug_perturb_rhs = perturb;
    FlatnessReport report = flatness_verdict(pencil.P, pencil.Q, point, options);
    emit(make_flatness_report(model, report), format);
    return report.verdict == FlatnessVerdict::Flat ? kExitPositive : kExitNegative;
}

int run_casimir(const std::string& model_path, const std::string& point_text,
                const std::string& format, std::uint64_t seed)
{
    ModelFile model = load_model(model_path);
    Pencil pencil = model.instantiate();
    std::vector<Rational> point = resolve_point(point_text, model.dim);

    // The certificate needs the invariant volume form first.
    FlatnessReport report = flatness_verdict(pencil.P, pencil.Q, point);
    if (report.verdict != FlatnessVerdict::Flat) {
        ReportDocument doc = make_flatness_report(model, report);
        doc.command = "casimir";
        doc.notes.push_back("flatness pipeline stopped before the certificate stage");
        emit(doc, format);
        return kExitNegative;
    }
    CasimirCertificate cert = casimir_certificate(pencil.P, pencil.Q, *report.volume, point, seed);
    emit(make_casimir_report(model, cert), format);
    return cert.valid() ? kExitPositive : kExitNegative;
}

int run_generic(const std::string& model_path, const std::string& point_text,
                const std::string& format)
{
    ModelFile model = load_model(model_path);
    Pencil pencil = model.instantiate();
    std::vector<Rational> point = resolve_point(point_text, model.dim);
    GenericityCertificate cert = genericity_certificate(pencil, point);
    emit(make_generic_report(model, cert, point), format);
    return cert.generic() ? kExitPositive : kExitNegative;
}

int run_jk(const std::string& model_path, const std::string& point_text, const std::string& format,
           std::uint64_t seed)
{
    ModelFile model = load_model(model_path);
    Pencil pencil = model.instantiate();
    std::vector<Rational> point = resolve_point(point_text, model.dim);
    auto a = pencil.P.evaluate(point);
    auto b = pencil.Q.evaluate(point);
    QMatrix qa(model.dim, model.dim), qb(model.dim, model.dim);
    for (int i = 0; i < model.dim; ++i)
        for (int j = 0; j < model.dim; ++j) {
            qa.at(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            qb.at(i, j) = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    ConstantSkewPair pair(std::move(qa), std::move(qb));
    try {
        CanonicalBasisChange basis = jk_canonical_basis(pair, seed);
        emit(make_jk_report(model, basis, point), format);
        return kExitPositive;
    } catch (const NotGenericError& e) {
        ReportDocument doc;
        doc.command = "jk";
        doc.model_name = model.name;
        doc.dim = model.dim;
        doc.coords = model.coords;
        for (const Rational& r : point) doc.point.push_back(rat_to_string(r));
        doc.genericity = genericity_doc(genericity_certificate(pair));
        doc.verdict = "not_generic";
        doc.notes.push_back(e.what());
        emit(doc, format);
        return kExitNegative;
    }
}

int run_model(const std::string& kind, int n)
{
    Pencil pencil;
    std::string name;
    if (kind == "volterra") {
        pencil = models::volterra(n);
        name = "volterra-" + std::to_string(n);
    } else if (kind == "canonical") {
        pencil = models::canonical_pair(n);
        name = "canonical-" + std::to_string(n);
    } else {
        throw Error("unknown model kind '" + kind + "' (expected volterra or canonical)");
    }
    ModelFile model = ModelFile::from_pencil(pencil, name);
    std::cout << model.serialize();
    if (kind == "volterra" && n % 2 == 0)
        std::cout << "# warning: even n gives a pencil that is nowhere generic\n";
    return kExitPositive;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"flatness of odd-dimensional bihamiltonian structures via unimodularity"};
    app.require_subcommand(1);

    std::string model_path, point_text, format = "human", kind;
    std::uint64_t seed = 0;
    int perturb = -1;
    int model_n = 0;

    auto add_common = [&](CLI::App* cmd, bool with_point = true) {
        cmd->add_option("model", model_path, "model file path, or - for stdin")->required();
        if (with_point)
            cmd->add_option("--point", point_text, "evaluation point r1,r2,... (default: small primes)");
        cmd->add_option("--seed", seed, "seed for randomized stages");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    CLI::App* check = app.add_subcommand("check", "Jacobi and compatibility checks");
    add_common(check, false);

    CLI::App* flatness = app.add_subcommand("flatness", "full flatness pipeline");
    add_common(flatness);
    flatness->add_option("--debug-perturb-rhs", perturb,
                         "test hook: add 1 to this rhs equation (0-based) before solving");

    CLI::App* casimir = app.add_subcommand("casimir", "lambda-Casimir certificate");
    add_common(casimir);

    CLI::App* generic = app.add_subcommand("generic", "pointwise genericity certificate");
    add_common(generic);

    CLI::App* jk = app.add_subcommand("jk", "canonical basis of the constant pair at the point");
    add_common(jk);

    CLI::App* model = app.add_subcommand("model", "emit a built-in model file");
    model->add_option("kind", kind, "volterra | canonical")->required();
    model->add_option("--n", model_n, "size parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (check->parsed()) return run_check(model_path, format);
        if (flatness->parsed()) return run_flatness(model_path, point_text, format, perturb);
        if (casimir->parsed()) return run_casimir(model_path, point_text, format, seed);
        if (generic->parsed()) return run_generic(model_path, point_text, format);
        if (jk->parsed()) return run_jk(model_path, point_text, format, seed);
        if (model->parsed()) return run_model(kind, model_n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
