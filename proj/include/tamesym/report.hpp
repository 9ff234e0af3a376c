#pragma once

// Report rendering: one schema for every command, as text or byte-stable JSON.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamesym/examples.hpp"
#include "tamesym/hilbert.hpp"
#include "tamesym/realmodel.hpp"

namespace tamesym {

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    struct Row {
        std::string place;
        std::string symbol_value;
        bool trivial = true;
    };
    std::vector<Row> places;
    std::string constraint;
    bool satisfied = true;
    std::vector<std::string> derived_identities;
};

template <class T>
std::string value_text(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::string value_text(const QResidue& v) {
    if (std::holds_alternative<Rational>(v)) return value_text(std::get<Rational>(v));
    return value_text(std::get<QuadraticFieldElement>(v));
}

// residue-field elements rendered in the poly grammar, in the variable of the
// place they came from
inline std::string fq_value_text(const Fq& v, Var var) {
    const std::uint64_t p = v.context() ? v.context()->p : 2;
    PolyFp rep;
    for (std::size_t i = 0; i < v.coeffs().size(); ++i)
        rep += PolyFp::monomial(Fp::raw(v.coeffs()[i], p), var == Var::x ? static_cast<int>(i) : 0,
                                var == Var::x ? 0 : static_cast<int>(i));
    return to_string(rep);
}

template <class K>
Var place_variable(const Place<K>& p) {
    return p.is_infinite() ? Var::y : Place<K>::main_var(p.prime);
}

template <class K>
std::string place_text(const Place<K>& p) {
    return p.is_infinite() ? "inf" : "prime:" + to_string(p.prime);
}

inline std::string place_text(const QPlace& p) {
    return p.is_real() ? "real" : "p:" + value_text(p.p);
}

inline std::string uni_text(const std::vector<Rational>& c) {
    return to_string(PolyQ::from_univariate(Var::y, c));
}

inline std::string place_text(const RealPlaceRef& p) {
    switch (p.kind) {
        case RealPlaceRef::Kind::infinite: return "inf";
        case RealPlaceRef::Kind::finite_prime: return "prime:" + to_string(p.prime);
        case RealPlaceRef::Kind::isolated_root: {
            std::ostringstream os;
            os << "root of " << uni_text(p.root.defining) << " in (" << p.root.lo << ", " << p.root.hi
               << ")";
            return os.str();
        }
    }
    return "?";
}

template <class K>
std::string series_text(const BiSeries<K>& s) {
    Polynomial<K> p;
    for (const auto& [k, c] : s.terms())
        p += Polynomial<K>::monomial(c, k.first, k.second);
    std::string head = p.is_zero() ? "0" : to_string(p);
    std::ostringstream os;
    os << head << " + O(";
    switch (s.ring()) {
        case SeriesRing::total_degree: os << "(x,y)^" << s.precision(); break;
        case SeriesRing::poly_x_adic_y: os << "y^" << s.precision(); break;
        case SeriesRing::poly_y_adic_x: os << "x^" << s.precision(); break;
    }
    os << ")";
    return os.str();
}

inline std::string render_text(const Report& r, long long elapsed_us) {
    std::ostringstream os;
    os << "== " << r.command << " ==\n";
    for (const auto& [k, v] : r.inputs) os << "  " << k << " = " << v << "\n";
    if (!r.places.empty()) {
        os << "  places:\n";
        for (const auto& row : r.places)
            os << "    " << row.place << "  value " << row.symbol_value << "  "
               << (row.trivial ? "trivial" : "NONTRIVIAL") << "\n";
    }
    if (!r.constraint.empty()) os << "  constraint: " << r.constraint << "\n";
    for (const auto& d : r.derived_identities) os << "  derived: " << d << "\n";
    os << "  satisfied: " << (r.satisfied ? "true" : "false") << "\n";
    os << "  elapsed: " << elapsed_us << " us\n";
    return os.str();
}

inline std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.places)
        rows.push_back({{"place", row.place}, {"symbol_value", row.symbol_value}, {"trivial", row.trivial}});
    j["places"] = rows;
    j["constraint"] = r.constraint;
    j["satisfied"] = r.satisfied;
    j["derived_identities"] = r.derived_identities;
    return j.dump(2) + "\n";
}

} // namespace tamesym
