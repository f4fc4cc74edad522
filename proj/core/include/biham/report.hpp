/*
 * report.hpp
 * ----------
 * Structured report documents for the command-line front end: one document
 * per run, renderable as human-readable text or machine-readable JSON that
 * round-trips losslessly. schema_version is mandatory in the JSON form.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biham/casimir.hpp"
#include "biham/model_file.hpp"
#include "biham/pencil.hpp"
#include "biham/unimod.hpp"

namespace biham {

struct WitnessDoc {
    std::vector<int> indices; // 1-based component indices
    std::string value;
    bool operator==(const WitnessDoc&) const = default;
};

struct CheckDoc {
    bool ok = false;
    std::optional<WitnessDoc> witness;
    bool operator==(const CheckDoc&) const = default;
};

struct GenericityDoc {
    bool generic = false;
    std::string gcd_finite;
    bool infinity_ok = false;
    std::vector<std::string> deleted_pfaffians;
    std::string degenerate_locus; // empty when generic
    bool operator==(const GenericityDoc&) const = default;
};

struct DensityDoc {
    std::string rational_part;
    std::vector<std::pair<std::string, std::string>> log_terms; // (factor, exponent)
    bool operator==(const DensityDoc&) const = default;
};

struct VolumeDoc {
    std::vector<std::string> log_derivative;
    std::optional<DensityDoc> explicit_density;
    bool operator==(const VolumeDoc&) const = default;
};

struct SolverDoc {
    std::string status; // unique | inconsistent | underdetermined
    int witness_equation = -1;
    std::string witness_residue;
    int free_column = -1;
    bool operator==(const SolverDoc&) const = default;
};

struct CasimirDoc {
    bool kernel_ok = false;
    bool closed_ok = false;
    bool nonvanishing_ok = false;
    int degree = -1;
    int samples = 0;
    std::vector<std::string> sampled_lambdas;
    bool operator==(const CasimirDoc&) const = default;
};

struct BasisDoc {
    int dim = 0;
    std::vector<std::vector<std::string>> matrix; // T rows
    bool operator==(const BasisDoc&) const = default;
};

struct ReportDocument {
    int schema_version = 1;
    std::string command;
    std::string model_name;
    int dim = 0;
    std::vector<std::string> coords;
    std::vector<std::string> point;
    std::string verdict;

    std::optional<CheckDoc> poisson_p;
    std::optional<CheckDoc> poisson_q;
    std::optional<CheckDoc> compatibility;
    std::optional<GenericityDoc> genericity;
    std::optional<SolverDoc> solver;
    std::optional<std::vector<std::string>> alpha;
    std::optional<bool> alpha_closed;
    std::optional<WitnessDoc> closedness_witness;
    std::optional<VolumeDoc> volume;
    std::optional<CasimirDoc> casimir;
    std::optional<BasisDoc> basis;
    std::vector<std::string> notes;

    bool operator==(const ReportDocument&) const = default;

    std::string to_json_string() const;
    static ReportDocument from_json_string(const std::string& text);
    std::string to_human_string() const;
};

// Builders used by the CLI commands.
ReportDocument make_check_report(const ModelFile& model, const PoissonCheck& p,
                                 const PoissonCheck& q, const CompatibilityCheck& c);
ReportDocument make_flatness_report(const ModelFile& model, const FlatnessReport& report);
ReportDocument make_generic_report(const ModelFile& model, const GenericityCertificate& cert,
                                   std::span<const Rational> point);
ReportDocument make_casimir_report(const ModelFile& model, const CasimirCertificate& cert);
ReportDocument make_jk_report(const ModelFile& model, const CanonicalBasisChange& basis,
                              std::span<const Rational> point);

// Shared helpers.
GenericityDoc genericity_doc(const GenericityCertificate& cert);
std::vector<std::string> render_components(const OneForm& form);

} // namespace biham
