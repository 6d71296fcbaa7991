#pragma once

#include <compare>
#include <map>
#include <tuple>

#include "mdseries/errors.hpp"

namespace mdseries {

/// The two indexed symbol families. The dimension symbol d is handled
/// separately because it alone may carry negative exponents.
enum class SymbolKind { b, jbar };

struct Symbol {
    SymbolKind kind;
    int index; // >= 1

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline Symbol b_sym(int i) { return {SymbolKind::b, i}; }
inline Symbol j_sym(int i) { return {SymbolKind::jbar, i}; }

/// A power product d^dExp * prod b_i^e * prod J_i^e. Exponents of b/J are
/// positive (an absent entry means exponent zero); dExp may be negative.
struct Monomial {
    int d_exp = 0;
    std::map<int, int> b_exps;
    std::map<int, int> j_exps;

    static Monomial unit() { return {}; }
    static Monomial d(int e) {
        Monomial m;
        m.d_exp = e;
        return m;
    }
    static Monomial b(int i, int e = 1) {
        check_symbol(i, e);
        Monomial m;
        if (e != 0) m.b_exps[i] = e;
        return m;
    }
    static Monomial j(int i, int e = 1) {
        check_symbol(i, e);
        Monomial m;
        if (e != 0) m.j_exps[i] = e;
        return m;
    }

    bool is_unit() const { return d_exp == 0 && b_exps.empty() && j_exps.empty(); }

    int exponent_of(Symbol s) const {
        const auto& m = (s.kind == SymbolKind::b) ? b_exps : j_exps;
        auto it = m.find(s.index);
        return it == m.end() ? 0 : it->second;
    }

    /// Product: exponents add; d may cancel to zero.
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        r.d_exp += b.d_exp;
        merge(r.b_exps, b.b_exps);
        merge(r.j_exps, b.j_exps);
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical term order: lexicographic on (d_exp, b_exps, j_exps); the
    /// exponent maps compare entrywise in increasing index order. Only
    /// determinism matters.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::tie(a.d_exp, a.b_exps, a.j_exps) < std::tie(b.d_exp, b.b_exps, b.j_exps);
    }

private:
    static void check_symbol(int i, int e) {
        if (i < 1) throw UsageError("symbol index must be >= 1");
        if (e < 0) throw UsageError("b/J exponents must be non-negative");
    }
    static void merge(std::map<int, int>& into, const std::map<int, int>& from) {
        for (const auto& [i, e] : from) {
            int& slot = into[i];
            slot += e;
            if (slot == 0) into.erase(i);
        }
    }
};

} // namespace mdseries
