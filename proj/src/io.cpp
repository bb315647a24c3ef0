#include "assoc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace assoc {

using nlohmann::json;

json scheme_to_json(const AssociationScheme& scheme) {
    json doc;
    doc["n"] = scheme.vertex_count();
    doc["d"] = scheme.class_count();
    if (!scheme.name().empty()) doc["name"] = scheme.name();
    doc["class_names"] = scheme.class_names();
    json rel = json::array();
    for (const auto& a : scheme.relations()) {
        std::vector<int> flat(a.data().begin(), a.data().end());
        rel.push_back(std::move(flat));
    }
    doc["relations"] = std::move(rel);
    return doc;
}

AssociationScheme scheme_from_json(const json& doc) {
    auto bad = [](const std::string& why) { return Error(Errc::ParseError, why); };
    if (!doc.is_object()) throw bad("scheme document must be a JSON object");
    for (const char* key : {"n", "d", "relations"})
        if (!doc.contains(key)) throw bad(std::string("missing key \"") + key + "\"");
    auto count = [](const json& v) { return v.is_number_integer() && v.get<long long>() >= 0; };
    if (!count(doc["n"]) || !count(doc["d"])) throw bad("\"n\" and \"d\" must be non-negative integers");
    const auto n = doc["n"].get<std::size_t>();
    const auto d = doc["d"].get<std::size_t>();
    const auto& rel = doc["relations"];
    if (!rel.is_array() || rel.size() != d + 1)
        throw bad("\"relations\" must hold d+1 = " + std::to_string(d + 1) + " matrices");

    std::vector<RelationMatrix> relations;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        const auto& flat = rel[i];
        if (!flat.is_array() || flat.size() != n * n)
            throw bad("relation " + std::to_string(i) + " must be a flat array of n*n entries");
        RelationMatrix a(n);
        for (std::size_t e = 0; e < flat.size(); ++e) {
            if (!flat[e].is_number_integer()) throw bad("relation entries must be integers");
            const auto v = flat[e].get<long long>();
            if (v != 0 && v != 1)
                throw Error(Errc::NotZeroOne, "relation " + std::to_string(i) + " has entry " + std::to_string(v));
            a.data()[e] = static_cast<std::uint8_t>(v);
        }
        relations.push_back(std::move(a));
    }
    std::vector<std::string> names;
    if (doc.contains("class_names")) {
        if (!doc["class_names"].is_array()) throw bad("\"class_names\" must be an array");
        for (const auto& s : doc["class_names"]) {
            if (!s.is_string()) throw bad("class names must be strings");
            names.push_back(s.get<std::string>());
        }
    }
    std::string name;
    if (doc.contains("name") && doc["name"].is_string()) name = doc["name"].get<std::string>();
    return verify_scheme(std::move(relations), std::move(names), std::move(name));
}

void write_scheme_file(const AssociationScheme& scheme, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
    out << scheme_to_json(scheme).dump() << '\n';
    if (!out) throw Error(Errc::ParseError, "write to " + path + " failed");
}

AssociationScheme read_scheme_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
    return scheme_from_json(doc);
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return Error(Errc::ParseError, "not a number: '" + std::string(text) + "'"); };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw bad();

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const Rational num = parse_rational(s.substr(0, slash));
        const Rational den = parse_rational(s.substr(slash + 1));
        if (sgn(den) == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
        Rational r = num / den;
        r.canonicalize();
        return r;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
        if (s[pos] == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits.push_back(s[pos]);
            seen_digit = true;
            if (seen_dot) --scale;
        } else {
            throw bad();
        }
    }
    if (!seen_digit) throw bad();
    if (pos < s.size()) {
        const std::string exp = s.substr(pos + 1);
        if (exp.empty()) throw bad();
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exp, &used);
        } catch (const std::exception&) {
            throw bad();
        }
        if (used != exp.size() || e > 10000 || e < -10000) throw bad();
        scale += e;
    }
    Integer mant(digits, 10);
    Integer pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational r = scale < 0 ? Rational(mant, pow10) : Rational(mant * pow10);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

ConductanceVector parse_conductances(std::string_view text, std::size_t d) {
    std::vector<Rational> values;
    std::size_t start = 0;
    const std::string s(text);
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const auto item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        values.push_back(parse_rational(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (values.size() > d) {
        std::ostringstream msg;
        msg << values.size() << " conductances given, scheme has " << d << " classes";
        throw Error(Errc::BadParameter, msg.str());
    }
    values.resize(d, Rational(0));
    return ConductanceVector(std::move(values));
}

std::string format_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace assoc
