#include "assoc/report.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "assoc/io.hpp"

namespace assoc {

using nlohmann::json;

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::vector<std::pair<std::size_t, Rational>> reference_values(const std::string& scheme_name) {
    auto q = [](long num, long den) {
        Rational r(num, den);
        r.canonicalize();
        return r;
    };
    if (scheme_name == "s4") return {{1, q(23, 72)}, {2, q(35, 96)}, {3, q(3, 8)}, {4, q(145, 36)}};
    if (scheme_name == "s4-refined-a")
        return {{1, q(23, 36)}, {2, q(33, 36)}, {3, q(89, 90)}, {4, q(187, 180)}, {5, q(21, 20)}, {6, q(16, 15)}};
    if (scheme_name == "z5z5") return {{1, q(24, 75)}, {2, q(112, 275)}, {3, q(327, 825)}, {4, q(2942, 275)}};
    return {};
}

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

RunReport run_resist(const AssociationScheme& scheme, const ConductanceVector& c,
                     const std::vector<Method>& methods, double tolerance) {
    validate_conductances(scheme, c);
    RunReport rep;
    rep.scheme_name = scheme.name();
    rep.n = scheme.vertex_count();
    rep.d = scheme.class_count();
    rep.valencies = scheme.valencies();
    rep.class_names = scheme.class_names();
    rep.conductances = c;

    for (Method m : methods) {
        if ((m == Method::Polynomial || m == Method::ClosedForm) && !c.single_on_first())
            throw Error(Errc::MethodPreconditionViolated,
                        std::string(method_name(m)) + " needs a single positive conductance on class 1");
        if (m == Method::ClosedForm && !check_distance_regular(scheme))
            throw Error(Errc::MethodPreconditionViolated, "closed needs a distance-regular scheme");
    }

    for (Method m : methods) {
        Stopwatch watch;
        switch (m) {
            case Method::Oracle:
                rep.tables.push_back(resistance_oracle(scheme, c));
                break;
            case Method::Spectral:
                rep.tables.push_back(resistance_spectral(scheme, spectral_data(scheme), c));
                break;
            case Method::Polynomial:
                rep.tables.push_back(resistance_polynomial(scheme, polynomial_coefficients(scheme), c.at(1)));
                break;
            case Method::ClosedForm: {
                ResistanceTable t = resistance_closed_form(scheme);
                const Rational c1 = c.at(1);
                for (std::size_t l = 1; l < t.values.size(); ++l) {
                    (*t.exact)[l] /= c1;
                    t.values[l] = (*t.exact)[l].get_d();
                }
                rep.tables.push_back(std::move(t));
                break;
            }
        }
        rep.timings.push_back({std::string(method_name(m)), watch.seconds()});
    }

    for (const auto& t : rep.tables) {
        const FosterReport f = foster_sum(scheme, c, t);
        rep.checks.push_back({"foster:" + std::string(method_name(t.method)), f.pass, f.residual});
        if (t.method == Method::Oracle) rep.checks.push_back({"stratum-spread:oracle", t.stratum_spread <= 1e-9, t.stratum_spread});
    }
    for (std::size_t i = 0; i < rep.tables.size(); ++i)
        for (std::size_t j = i + 1; j < rep.tables.size(); ++j) {
            const auto& a = rep.tables[i];
            const auto& b = rep.tables[j];
            double worst = 0;
            for (std::size_t l = 0; l < a.values.size(); ++l) worst = std::max(worst, std::abs(a.values[l] - b.values[l]));
            const bool pass = (a.exact && b.exact) ? *a.exact == *b.exact : worst <= tolerance;
            rep.checks.push_back({"agreement:" + std::string(method_name(a.method)) + "-" + std::string(method_name(b.method)),
                                  pass, worst});
        }

    if (c.single_on_first() && c.at(1) == 1) {
        const ResistanceTable* exact = nullptr;
        for (const auto& t : rep.tables)
            if (t.exact) exact = &t;
        for (const auto& [cls, value] : reference_values(scheme.name())) {
            if (cls > rep.d) continue;
            ReferenceStatus s{cls, value, std::nullopt, false};
            if (exact) {
                s.computed = (*exact->exact)[cls];
                s.confirmed = *s.computed == value;
            } else {
                s.confirmed = !rep.tables.empty();
                for (const auto& t : rep.tables)
                    s.confirmed = s.confirmed && std::abs(t.values[cls] - value.get_d()) <= tolerance;
            }
            rep.references.push_back(std::move(s));
        }
    }
    return rep;
}

namespace {

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace

json report_to_json(const RunReport& report) {
    json doc;
    doc["scheme"] = {{"name", report.scheme_name}, {"n", report.n}, {"d", report.d},
                     {"valencies", report.valencies}, {"class_names", report.class_names}};
    json cond = json::array();
    for (const auto& x : report.conductances.values()) cond.push_back(format_rational(x));
    doc["conductances"] = cond;

    json tables = json::array();
    for (const auto& t : report.tables) {
        json values = json::array();
        for (std::size_t l = 1; l < t.values.size(); ++l) {
            json v = {{"class", l}, {"name", report.class_names.at(l)}, {"kappa", report.valencies.at(l)},
                      {"float", t.values[l]}};
            if (t.exact) {
                v["num"] = integer_json((*t.exact)[l].get_num());
                v["den"] = integer_json((*t.exact)[l].get_den());
            } else {
                v["num"] = nullptr;
                v["den"] = nullptr;
            }
            values.push_back(std::move(v));
        }
        tables.push_back({{"method", std::string(method_name(t.method))}, {"values", std::move(values)}});
    }
    doc["tables"] = std::move(tables);

    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    doc["checks"] = std::move(checks);

    json refs = json::array();
    for (const auto& r : report.references) {
        json e = {{"class", r.cls}, {"reference", format_rational(r.reference)},
                  {"status", r.confirmed ? "CONFIRMED" : "UNCONFIRMED"}};
        e["computed"] = r.computed ? json(format_rational(*r.computed)) : json(nullptr);
        refs.push_back(std::move(e));
    }
    doc["references"] = std::move(refs);

    json timing = json::array();
    for (const auto& t : report.timings) timing.push_back({{"stage", t.stage}, {"seconds", t.seconds}});
    doc["timing"] = std::move(timing);
    return doc;
}

std::string report_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "class,kappa,R_exact_num,R_exact_den,R_float,method\n";
    out << std::setprecision(17);
    for (const auto& t : report.tables)
        for (std::size_t l = 1; l < t.values.size(); ++l) {
            out << l << ',' << report.valencies.at(l) << ',';
            if (t.exact) out << (*t.exact)[l].get_num().get_str() << ',' << (*t.exact)[l].get_den().get_str();
            else out << ',';
            out << ',' << t.values[l] << ',' << method_name(t.method) << '\n';
        }
    return out.str();
}

void print_report(const RunReport& report, std::ostream& out) {
    out << "scheme " << (report.scheme_name.empty() ? "(unnamed)" : report.scheme_name) << ": N=" << report.n
        << " d=" << report.d << " kappa=(";
    for (std::size_t i = 0; i < report.valencies.size(); ++i) out << (i ? "," : "") << report.valencies[i];
    out << ")\n";
    const auto old = out.precision(12);
    for (const auto& t : report.tables) {
        out << "[" << method_name(t.method) << "]\n";
        for (std::size_t l = 1; l < t.values.size(); ++l) {
            out << "  R(" << l << " " << report.class_names.at(l) << ") = ";
            if (t.exact) out << format_rational((*t.exact)[l]) << " = ";
            out << t.values[l] << '\n';
        }
    }
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << " residual=" << c.residual << '\n';
    for (const auto& r : report.references) {
        out << (r.confirmed ? "CONFIRMED   " : "UNCONFIRMED ") << "reference R(" << r.cls
            << ") = " << format_rational(r.reference);
        if (r.computed) out << ", computed " << format_rational(*r.computed);
        out << '\n';
    }
    for (const auto& t : report.timings) out << "time " << t.stage << " " << t.seconds << " s\n";
    out.precision(old);
}

}  // namespace assoc
