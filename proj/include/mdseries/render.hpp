#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdseries/errors.hpp"
#include "mdseries/multipoly.hpp"
#include "mdseries/verify.hpp"

namespace mdseries {

/// Versioned id stamped on every JSON report.
inline constexpr const char* kReportSchema = "mdseries-report/v1";

/// One named polynomial row of a coefficient table (e.g. "J_2" -> 1/2 + ...).
struct CoeffTable {
    std::string name;
    MultiPoly value;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

inline std::vector<CoeffTable> tables_from_jbar(const JSequence& j) {
    std::vector<CoeffTable> t;
    for (int i = 2; i <= j.order(); ++i) t.push_back({"J_" + std::to_string(i), j.at(i)});
    return t;
}

inline std::vector<CoeffTable> tables_from_b(const BSequence& b) {
    std::vector<CoeffTable> t;
    for (int i = 2; i <= b.order(); ++i) t.push_back({"b_" + std::to_string(i), b.at(i)});
    return t;
}

inline std::vector<CoeffTable> tables_from_coeffs(const std::vector<MultiPoly>& a, bool primed) {
    std::vector<CoeffTable> t;
    for (int k = 2; k < (int)a.size(); ++k)
        t.push_back({(primed ? "ap_" : "a_") + std::to_string(k), a[k]});
    return t;
}

// ---------------------------------------------------------------- LaTeX ----

/// Table-row names to display-style symbols: J_2 -> \bar{J}_{2}, ap_3 -> a'_{3}.
inline std::string latex_name(const std::string& name) {
    auto split = name.find('_');
    if (split == std::string::npos) return name;
    std::string head = name.substr(0, split);
    std::string idx = name.substr(split + 1);
    if (head == "J") return "\\bar{J}_{" + idx + "}";
    if (head == "ap") return "a'_{" + idx + "}";
    return head + "_{" + idx + "}";
}

namespace detail {
inline std::string latex_rational(const Rational& r) {
    if (r.is_integer()) return r.numerator().str();
    std::string n = r.numerator().str();
    bool neg = !n.empty() && n[0] == '-';
    if (neg) n = n.substr(1);
    return std::string(neg ? "-" : "") + "\\frac{" + n + "}{" + r.denominator().str() + "}";
}

inline std::string latex_monomial(const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& base, int e) {
        if (!first) out << " ";
        first = false;
        out << base;
        if (e != 1) out << "^{" << e << "}";
    };
    if (m.d_exp != 0) emit("d", m.d_exp);
    for (const auto& [i, e] : m.b_exps) emit("b_{" + std::to_string(i) + "}", e);
    for (const auto& [i, e] : m.j_exps) emit("\\bar{J}_{" + std::to_string(i) + "}", e);
    return out.str();
}

inline std::string latex_terms(const MultiPoly& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.is_negative()) out << "-";
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        first = false;
        std::string factors = latex_monomial(m);
        if (factors.empty()) {
            out << latex_rational(a);
        } else if (a.is_one()) {
            out << factors;
        } else {
            out << latex_rational(a) << " " << factors;
        }
    }
    return out.str();
}
} // namespace detail

/// Expanded canonical LaTeX form.
inline std::string latex_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    return detail::latex_terms(p);
}

/// Factored layout matching the style of printed coefficient tables: an
/// overall positive rational content and the lowest power of d pulled out,
/// leaving a parenthesized integer-coefficient polynomial, e.g.
///   \frac{1}{4} d^{-2} \left( 2 d^{2} + b_{2} \right).
inline std::string latex_poly_factored(const MultiPoly& p) {
    if (p.is_zero()) return "0";

    int min_d = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first || m.d_exp < min_d) min_d = m.d_exp;
        first = false;
    }
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = big_gcd(num_gcd, c.numerator());
        den_lcm = c.denominator() / big_gcd(den_lcm, c.denominator()) * den_lcm;
    }
    Rational content(num_gcd, den_lcm);

    MultiPoly reduced;
    for (const auto& [m, c] : p.terms()) {
        Monomial shifted = m;
        shifted.d_exp -= min_d;
        reduced += MultiPoly::term(shifted, c / content);
    }

    bool bare = content.is_one() && min_d == 0;
    if (bare) return detail::latex_terms(reduced);
    std::ostringstream out;
    if (!content.is_one()) out << detail::latex_rational(content) << " ";
    if (min_d != 0) out << "d^{" << min_d << "} ";
    if (reduced.terms().size() == 1 && !reduced.terms().begin()->first.is_unit() &&
        reduced.terms().begin()->second.is_one()) {
        out << detail::latex_terms(reduced);
    } else {
        out << "\\left( " << detail::latex_terms(reduced) << " \\right)";
    }
    return out.str();
}

inline std::string latex_equation(const CoeffTable& row) {
    return latex_name(row.name) + " = " + latex_poly_factored(row.value);
}

// ----------------------------------------------------------------- JSON ----

using json = nlohmann::json;

/// One polynomial as a term array: [{coeff: "n/m", exps: {d, b: {i: e}, J: {i: e}}}].
inline json poly_terms_json(const MultiPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json b = json::object(), jj = json::object();
        for (const auto& [i, e] : m.b_exps) b[std::to_string(i)] = e;
        for (const auto& [i, e] : m.j_exps) jj[std::to_string(i)] = e;
        arr.push_back({{"coeff", c.str()}, {"exps", {{"d", m.d_exp}, {"b", b}, {"J", jj}}}});
    }
    return arr;
}

inline MultiPoly poly_from_terms_json(const json& arr) {
    if (!arr.is_array()) throw UsageError("term list must be a JSON array");
    MultiPoly p;
    for (const json& t : arr) {
        Rational c = Rational::parse(t.at("coeff").get<std::string>());
        const json& exps = t.at("exps");
        Monomial m;
        m.d_exp = exps.at("d").get<int>();
        for (const auto& [key, val] : exps.at("b").items())
            m.b_exps[std::stoi(key)] = val.get<int>();
        for (const auto& [key, val] : exps.at("J").items())
            m.j_exps[std::stoi(key)] = val.get<int>();
        p += MultiPoly::term(m, c);
    }
    return p;
}

inline json verdict_report(const Verdict& v) {
    json r = {{"schema", kReportSchema},
              {"claim", claim_name(v.claim)},
              {"order", v.order},
              {"status", status_name(v.status)}};
    if (v.witness)
        r["witness"] = {{"k", v.witness->k}, {"residualTerms", poly_terms_json(v.witness->residual)}};
    if (!v.notes.empty()) r["notes"] = v.notes;
    return r;
}

inline Claim claim_from_name(const std::string& s) {
    for (Claim c : {Claim::master, Claim::catalan_part1, Claim::catalan_part2,
                    Claim::catalan_part3, Claim::e_closed_form, Claim::triangularity})
        if (s == claim_name(c)) return c;
    throw UsageError("unknown claim tag: " + s);
}

inline Status status_from_name(const std::string& s) {
    for (Status st : {Status::verified, Status::refuted, Status::divergence})
        if (s == status_name(st)) return st;
    throw UsageError("unknown status tag: " + s);
}

inline Verdict verdict_from_report(const json& r) {
    if (r.value("schema", "") != kReportSchema) throw UsageError("unknown report schema");
    Verdict v;
    v.claim = claim_from_name(r.at("claim").get<std::string>());
    v.order = r.at("order").get<int>();
    v.status = status_from_name(r.at("status").get<std::string>());
    if (r.contains("witness")) {
        Witness w;
        w.k = r.at("witness").at("k").get<int>();
        w.residual = poly_from_terms_json(r.at("witness").at("residualTerms"));
        v.witness = w;
    }
    if ((v.status == Status::refuted) != v.witness.has_value())
        throw UsageError("report violates the witness-iff-refuted invariant");
    v.notes = r.value("notes", "");
    return v;
}

inline json tables_report(const std::string& command, int order,
                          const std::vector<CoeffTable>& tables) {
    json arr = json::array();
    for (const CoeffTable& t : tables)
        arr.push_back({{"name", t.name}, {"terms", poly_terms_json(t.value)}});
    return {{"schema", kReportSchema}, {"command", command}, {"order", order}, {"tables", arr}};
}

inline std::vector<CoeffTable> tables_from_report(const json& r) {
    if (r.value("schema", "") != kReportSchema) throw UsageError("unknown report schema");
    std::vector<CoeffTable> out;
    for (const json& t : r.at("tables"))
        out.push_back({t.at("name").get<std::string>(), poly_from_terms_json(t.at("terms"))});
    return out;
}

// ----------------------------------------------------------------- text ----

/// Human-readable verdict block; lists the per-order residuals (zero when
/// verified, the witness at its order when refuted).
inline std::string verdict_text(const Verdict& v) {
    std::ostringstream out;
    out << "claim:  " << claim_name(v.claim) << "\n";
    out << "order:  " << v.order << "\n";
    out << "status: " << status_name(v.status) << "\n";
    if (v.status != Status::divergence) {
        int stop = v.witness ? v.witness->k : v.order;
        for (int k = 2; k < stop; ++k) out << "  k=" << k << ": residual 0\n";
        if (v.witness)
            out << "  k=" << v.witness->k << ": residual " << v.witness->residual.str() << "\n";
        else if (v.order >= 2)
            out << "  k=" << v.order << ": residual 0\n";
    }
    if (v.witness) out << "witness at k=" << v.witness->k << "\n";
    if (!v.notes.empty()) out << "note:   " << v.notes << "\n";
    return out.str();
}

inline std::string tables_text(const std::vector<CoeffTable>& tables) {
    std::ostringstream out;
    for (const CoeffTable& t : tables) out << t.name << " = " << t.value.str() << "\n";
    return out.str();
}

inline std::string tables_latex(const std::vector<CoeffTable>& tables) {
    std::ostringstream out;
    for (const CoeffTable& t : tables) out << latex_equation(t) << "\n";
    return out.str();
}

} // namespace mdseries
