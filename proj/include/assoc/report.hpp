#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "assoc/resistance.hpp"
#include "assoc/scheme.hpp"

namespace assoc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double residual = 0;
};

struct StageTiming {
    std::string stage;
    double seconds = 0;
};

/// A reference value compared against the computed exact table.
struct ReferenceStatus {
    std::size_t cls = 0;
    Rational reference;
    std::optional<Rational> computed;
    bool confirmed = false;
};

struct RunReport {
    std::string scheme_name;
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::size_t> valencies;
    std::vector<std::string> class_names;
    ConductanceVector conductances;
    std::vector<ResistanceTable> tables;
    std::vector<CheckResult> checks;
    std::vector<ReferenceStatus> references;
    std::vector<StageTiming> timings;

    bool all_pass() const;
};

/// Literature values of the exact resistances with c_1 = 1 for the named example
/// schemes (s4, s4-refined-a, z5z5); empty for any other name.
std::vector<std::pair<std::size_t, Rational>> reference_values(const std::string& scheme_name);

/// Runs the requested engines, then the Foster check per table, the stratum
/// check for the oracle, and pairwise agreement within `tolerance` (exact
/// equality between two exact tables). Precondition failures throw
/// Errc::MethodPreconditionViolated.
RunReport run_resist(const AssociationScheme& scheme, const ConductanceVector& c,
                     const std::vector<Method>& methods, double tolerance = 1e-8);

nlohmann::json report_to_json(const RunReport& report);

/// class,kappa,R_exact_num,R_exact_den,R_float,method
std::string report_to_csv(const RunReport& report);

/// Human-readable summary.
void print_report(const RunReport& report, std::ostream& out);

}  // namespace assoc
