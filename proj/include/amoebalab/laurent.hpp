/*
 * laurent.hpp
 * -----------
 * Sparse real bivariate Laurent polynomials: the defining equation of the
 * curve under study. Exponents may be negative (the curve lives in the
 * torus, where multiplying by a monomial does not change the zero set).
 *
 * The expression grammar accepted by parse() is a sum of terms of the form
 *   c * x^i * y^j
 * with real c and integer i, j (negative exponents allowed, parentheses
 * around a negative exponent optional). Whitespace is ignored.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace amoebalab {

using cplx = std::complex<double>;

struct Term {
    int i = 0;
    int j = 0;
    double c = 0.0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

class DegenerateSupportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Var { X, Y };

/// Which variable a univariate slice runs over, and where the other one was
/// pinned.
struct SliceOrigin {
    Var fixed = Var::X;
    cplx value{0.0, 0.0};
};

/// Dense univariate polynomial (ascending coefficients) obtained by fixing
/// one variable of a Laurent polynomial and clearing negative powers.
struct UnivariateSlice {
    std::vector<cplx> coeffs;  // ascending, trimmed, leading nonzero
    SliceOrigin origin;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    cplx eval(cplx t) const {
        cplx acc{0.0, 0.0};
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
        return acc;
    }
};

class LaurentPoly {
public:
    LaurentPoly() = default;

    explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
        normalize();
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Merge duplicate exponent pairs, drop zero coefficients, sort by (i, j).
    void normalize() {
        std::map<std::pair<int, int>, double> acc;
        for (const Term& t : terms_) acc[{t.i, t.j}] += t.c;
        terms_.clear();
        for (const auto& [ij, c] : acc)
            if (c != 0.0) terms_.push_back({ij.first, ij.second, c});
    }

    /// All exponent pairs collinear (or fewer than three of them)?
    bool support_collinear() const {
        if (terms_.size() < 3) return true;
        const Term& a = terms_[0];
        const Term& b = terms_[1];
        for (std::size_t k = 2; k < terms_.size(); ++k) {
            long long cross =
                static_cast<long long>(b.i - a.i) * (terms_[k].j - a.j) -
                static_cast<long long>(b.j - a.j) * (terms_[k].i - a.i);
            if (cross != 0) return false;
        }
        return true;
    }

    void require_nondegenerate() const {
        if (terms_.empty())
            throw DegenerateSupportError("polynomial has empty support");
        if (support_collinear())
            throw DegenerateSupportError(
                "support is collinear: Newton polygon is degenerate");
    }

    cplx eval(cplx z1, cplx z2) const {
        if (z1 == cplx{0.0, 0.0} || z2 == cplx{0.0, 0.0})
            throw DomainError("eval: the domain is the torus, got a zero coordinate");
        cplx acc{0.0, 0.0};
        for (const Term& t : terms_) acc += t.c * ipow(z1, t.i) * ipow(z2, t.j);
        return acc;
    }

    double eval_real(double x, double y) const {
        double acc = 0.0;
        for (const Term& t : terms_) acc += t.c * rpow(x, t.i) * rpow(y, t.j);
        return acc;
    }

    /// Sum of term magnitudes at (|x|, |y|); the natural residual scale.
    double scale(double ax, double ay) const {
        double acc = 0.0;
        for (const Term& t : terms_)
            acc += std::abs(t.c) * rpow(ax, t.i) * rpow(ay, t.j);
        return acc;
    }

    double scale(cplx z1, cplx z2) const { return scale(std::abs(z1), std::abs(z2)); }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const Term& t : terms_) m = std::max(m, std::abs(t.c));
        return m;
    }

    /// Divide all coefficients by the largest magnitude (zero set unchanged).
    LaurentPoly normalized_coeffs() const {
        double m = max_abs_coeff();
        std::vector<Term> out = terms_;
        if (m > 0.0)
            for (Term& t : out) t.c /= m;
        return LaurentPoly(std::move(out));
    }

    static cplx ipow(cplx z, int e) {
        if (e == 0) return {1.0, 0.0};
        if (e < 0) return 1.0 / ipow(z, -e);
        cplx acc{1.0, 0.0};
        cplx base = z;
        int n = e;
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    static double rpow(double v, int e) {
        if (e == 0) return 1.0;
        if (e < 0) return 1.0 / rpow(v, -e);
        double acc = 1.0, base = v;
        int n = e;
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

private:
    std::vector<Term> terms_;  // sorted by (i, j), nonzero coefficients
};

/// (z1 df/dz1, z2 df/dz2): the two numerators of the logarithmic Gauss map.
/// Term-by-term this is (i*c, j*c) on the same exponents, so the support of
/// each component is contained in the input support.
inline std::pair<LaurentPoly, LaurentPoly> log_gauss_pair(const LaurentPoly& p) {
    std::vector<Term> a, b;
    for (const Term& t : p.terms()) {
        if (t.i != 0) a.push_back({t.i, t.j, t.i * t.c});
        if (t.j != 0) b.push_back({t.i, t.j, t.j * t.c});
    }
    return {LaurentPoly(std::move(a)), LaurentPoly(std::move(b))};
}

/// Fix one variable and return the dense univariate polynomial in the other,
/// multiplied by the minimal monomial clearing negative powers. Roots in C*
/// are preserved.
inline UnivariateSlice slice(const LaurentPoly& p, Var fixed, cplx value) {
    if (value == cplx{0.0, 0.0})
        throw DomainError("slice: fixed value must be nonzero");
    int emin = 0, emax = 0;
    bool first = true;
    for (const Term& t : p.terms()) {
        int e = (fixed == Var::X) ? t.j : t.i;
        if (first) {
            emin = emax = e;
            first = false;
        } else {
            emin = std::min(emin, e);
            emax = std::max(emax, e);
        }
    }
    UnivariateSlice s;
    s.origin = {fixed, value};
    if (first) return s;  // zero polynomial
    s.coeffs.assign(static_cast<std::size_t>(emax - emin) + 1, cplx{0.0, 0.0});
    for (const Term& t : p.terms()) {
        int e = (fixed == Var::X) ? t.j : t.i;
        int o = (fixed == Var::X) ? t.i : t.j;
        s.coeffs[static_cast<std::size_t>(e - emin)] += t.c * LaurentPoly::ipow(value, o);
    }
    while (!s.coeffs.empty() && s.coeffs.back() == cplx{0.0, 0.0}) s.coeffs.pop_back();
    return s;
}

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

inline int parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    bool paren = false;
    if (c.peek() == '(') {
        paren = true;
        ++c.pos;
        c.skip_ws();
    }
    int sign = 1;
    if (c.peek() == '-') {
        sign = -1;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    c.skip_ws();
    if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        throw ParseError("expected integer exponent", start);
    long v = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        v = v * 10 + (c.s[c.pos] - '0');
        if (v > 1000000) throw ParseError("exponent too large", start);
        ++c.pos;
    }
    if (paren) {
        if (c.peek() != ')') throw ParseError("expected ')'", c.pos);
        ++c.pos;
    }
    return sign * static_cast<int>(v);
}

inline double parse_number(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    std::size_t end = c.pos;
    auto isnum = [&](char ch) {
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.';
    };
    while (end < c.s.size() && isnum(c.s[end])) ++end;
    if (end < c.s.size() && (c.s[end] == 'e' || c.s[end] == 'E')) {
        std::size_t e = end + 1;
        if (e < c.s.size() && (c.s[e] == '+' || c.s[e] == '-')) ++e;
        std::size_t d = e;
        while (d < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[d]))) ++d;
        if (d > e) end = d;
    }
    if (end == start) throw ParseError("expected number", start);
    double v = 0.0;
    try {
        v = std::stod(c.s.substr(start, end - start));
    } catch (const std::exception&) {
        throw ParseError("malformed number", start);
    }
    c.pos = end;
    return v;
}

}  // namespace detail

/// Parse the term-sum grammar described at the top of this file.
inline LaurentPoly parse(const std::string& text) {
    detail::Cursor c{text};
    std::vector<Term> terms;
    bool first_term = true;
    while (!c.done()) {
        double sign = 1.0;
        // leading sign chain
        while (true) {
            char ch = c.peek();
            if (ch == '+') {
                ++c.pos;
            } else if (ch == '-') {
                sign = -sign;
                ++c.pos;
            } else {
                break;
            }
        }
        if (c.done()) throw ParseError("dangling sign", c.pos);
        if (!first_term && sign == 1.0 && text[c.pos] != '\0') {
            // nothing: '+' already consumed above when present
        }
        first_term = false;

        double coeff = 1.0;
        bool saw_factor = false;
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            coeff = detail::parse_number(c);
            saw_factor = true;
        }
        int ei = 0, ej = 0;
        while (true) {
            char f = c.peek();
            if (f == '*') {
                ++c.pos;
                continue;
            }
            if (f == 'x' || f == 'X' || f == 'y' || f == 'Y') {
                ++c.pos;
                int e = 1;
                if (c.peek() == '^') {
                    ++c.pos;
                    e = detail::parse_int(c);
                }
                if (f == 'x' || f == 'X')
                    ei += e;
                else
                    ej += e;
                saw_factor = true;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(f)) || f == '.') {
                coeff *= detail::parse_number(c);
                saw_factor = true;
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("expected term", c.pos);
        terms.push_back({ei, ej, sign * coeff});
        char nxt = c.peek();
        if (nxt != '\0' && nxt != '+' && nxt != '-')
            throw ParseError(std::string("unexpected character '") + nxt + "'", c.pos);
    }
    LaurentPoly p(std::move(terms));
    p.require_nondegenerate();
    return p;
}

/// Canonical text form; parse(format(p)) reproduces p exactly.
inline std::string format(const LaurentPoly& p) {
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (const Term& t : p.terms()) {
        double c = t.c;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            c = std::abs(c);
        }
        first = false;
        bool has_vars = (t.i != 0 || t.j != 0);
        if (!has_vars || c != 1.0) {
            out << c;
            if (has_vars) out << "*";
        }
        if (t.i != 0) {
            out << "x";
            if (t.i != 1) out << "^" << t.i;
            if (t.j != 0) out << "*";
        }
        if (t.j != 0) {
            out << "y";
            if (t.j != 1) out << "^" << t.j;
        }
    }
    if (first) out << "0";
    return out.str();
}

inline nlohmann::ordered_json to_json(const LaurentPoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const Term& t : p.terms())
        terms.push_back({{"i", t.i}, {"j", t.j}, {"c", t.c}});
    return {{"terms", terms}};
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({t.at("i").get<int>(), t.at("j").get<int>(), t.at("c").get<double>()});
    LaurentPoly p(std::move(terms));
    p.require_nondegenerate();
    return p;
}

}  // namespace amoebalab
