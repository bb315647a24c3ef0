#include "assoc/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "assoc/builders.hpp"
#include "assoc/io.hpp"
#include "assoc/report.hpp"

namespace assoc {

namespace {

void print_summary(const AssociationScheme& scheme, std::ostream& out) {
    out << "N=" << scheme.vertex_count() << " d=" << scheme.class_count() << " kappa=(";
    for (std::size_t i = 0; i < scheme.valencies().size(); ++i) out << (i ? "," : "") << scheme.valency(i);
    out << ")\n";
    if (const auto arr = check_distance_regular(scheme)) {
        out << "distance-regular: {";
        for (std::size_t i = 0; i < arr->b.size(); ++i) out << (i ? "," : "") << arr->b[i];
        out << "; ";
        for (std::size_t i = 0; i < arr->c.size(); ++i) out << (i ? "," : "") << arr->c[i];
        out << "}\n";
    } else {
        out << "distance-regular: no\n";
    }
}

}  // namespace

int cmd_build(const BuildOptions& options, std::ostream& out) {
    const AssociationScheme scheme = build_named(options.builder, options.size);
    if (options.out_path.empty()) {
        out << scheme_to_json(scheme).dump() << '\n';
        return 0;
    }
    write_scheme_file(scheme, options.out_path);
    out << "wrote " << options.out_path << '\n';
    print_summary(scheme, out);
    return 0;
}

namespace {

// A_1 has d+1 distinct eigenvalues, so its powers span the Bose-Mesner algebra.
bool first_class_generates(const AssociationScheme& scheme) {
    const SpectralData sp = spectral_data(scheme);
    std::vector<double> ev;
    for (Eigen::Index k = 0; k < sp.P.rows(); ++k) ev.push_back(sp.P(k, 1));
    std::sort(ev.begin(), ev.end());
    std::size_t distinct = ev.empty() ? 0 : 1;
    for (std::size_t i = 1; i < ev.size(); ++i)
        if (ev[i] - ev[i - 1] > 1e-7) ++distinct;
    return distinct == scheme.class_count() + 1;
}

}  // namespace

int cmd_resist(const ResistOptions& options, std::ostream& out) {
    const AssociationScheme scheme = read_scheme_file(options.scheme_path);
    const ConductanceVector c = parse_conductances(options.conductances, scheme.class_count());
    std::vector<Method> methods;
    for (const auto& name : options.methods) {
        if (name == "all") {
            // only the engines whose preconditions hold
            methods = {Method::Oracle, Method::Spectral};
            if (c.single_on_first() && first_class_generates(scheme)) {
                methods.push_back(Method::Polynomial);
                if (check_distance_regular(scheme) && scheme.class_count() <= 5) methods.push_back(Method::ClosedForm);
            }
            break;
        }
        const auto m = parse_method(name);
        if (!m) throw Error(Errc::BadParameter, "unknown method '" + name + "'");
        methods.push_back(*m);
    }
    if (methods.empty()) throw Error(Errc::BadParameter, "no method requested");
    if (options.format != "text" && options.format != "json" && options.format != "csv")
        throw Error(Errc::BadParameter, "format must be text, json or csv");

    const RunReport report = run_resist(scheme, c, methods, options.tolerance);
    auto render = [&](std::ostream& os) {
        if (options.format == "json") os << report_to_json(report).dump(2) << '\n';
        else if (options.format == "csv") os << report_to_csv(report);
        else print_report(report, os);
    };
    if (options.out_path.empty()) {
        render(out);
    } else {
        std::ofstream file(options.out_path);
        if (!file) throw Error(Errc::ParseError, "cannot open " + options.out_path + " for writing");
        render(file);
        print_report(report, out);
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_infinite(const InfiniteOptions& options, std::ostream& out) {
    const auto old = out.precision(12);
    int status = 0;
    if (options.kind == "line") {
        if (options.separation.size() != 1) throw Error(Errc::BadParameter, "line needs one separation");
        const auto r = infinite_line_resistance(options.separation[0]);
        out << "R = " << r.value << " +/- " << r.error_estimate << '\n';
    } else if (options.kind == "square" || options.kind == "hexagonal") {
        if (options.separation.size() != 2) throw Error(Errc::BadParameter, options.kind + " needs two separations");
        const LatticeKind kind = options.kind == "square" ? LatticeKind::Square : LatticeKind::Hexagonal;
        const long l1 = options.separation[0], l2 = options.separation[1];
        const auto r = infinite_lattice_resistance(kind, l1, l2);
        out << "R = " << r.value << " +/- " << r.error_estimate << '\n';
        if (options.cross_check) {
            for (long m : {50L, 100L, 200L})
                out << "finite m=" << m << ": " << finite_lattice_resistance_formula(kind, m, l1, l2) << '\n';
            const double extrap = finite_lattice_extrapolation(kind, 200, l1, l2);
            const double diff = std::abs(extrap - r.value);
            out << "extrapolated: " << extrap << " (difference " << diff << ")\n";
            if (diff > 1e-3) status = 1;
        }
    } else {
        throw Error(Errc::BadParameter, "kind must be line, square or hexagonal");
    }
    out.precision(old);
    return status;
}

int cmd_verify(const std::string& scheme_path, std::ostream& out) {
    const AssociationScheme scheme = read_scheme_file(scheme_path);
    out << "scheme verified\n";
    print_summary(scheme, out);
    const SpectralData sd = spectral_data(scheme);
    const SpectralResiduals r = check_spectral_invariants(scheme, sd);
    out << "|PQ-NI| = " << r.pq_minus_ni << ", |A_j E_k - P_kj E_k| = " << r.eigen_relation
        << ", |E_j E_k - delta E_j| = " << r.idempotent_products << ", sum m = " << r.multiplicity_sum << '\n';
    const bool ok = r.pq_minus_ni <= 1e-7 && r.eigen_relation <= 1e-7 && r.idempotent_products <= 1e-8 &&
                    r.multiplicity_sum == scheme.vertex_count();
    return ok ? 0 : 1;
}

}  // namespace assoc
