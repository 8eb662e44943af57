#include "pline/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pline {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2) throw construction_error("PrimeField: p must be >= 2, got " + std::to_string(p));
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= p; ++d)
        if (p % d == 0)
            throw construction_error("PrimeField: " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw domain_error("PrimeField::inv: 0 has no inverse");
    // extended Euclid on (a, p)
    long long t = 0, newt = 1, r = p_, newr = a % p_;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

Poly Poly::monomial(std::uint32_t coeff, std::size_t k) {
    if (coeff == 0) return {};
    Poly p;
    p.c.assign(k + 1, 0);
    p.c[k] = coeff;
    return p;
}

Poly poly_normalize(std::vector<std::uint32_t> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return Poly{std::move(coeffs)};
}

Poly poly_add(const PrimeField& k, const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out[i] = k.add(x, y);
    }
    return poly_normalize(std::move(out));
}

Poly poly_neg(const PrimeField& k, const Poly& a) {
    Poly out = a;
    for (auto& v : out.c) v = k.neg(v);
    return out;
}

Poly poly_sub(const PrimeField& k, const Poly& a, const Poly& b) {
    return poly_add(k, a, poly_neg(k, b));
}

Poly poly_mul(const PrimeField& k, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint32_t> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = k.add(out[i + j], k.mul(a.c[i], b.c[j]));
    }
    return poly_normalize(std::move(out));
}

Poly poly_scale(const PrimeField& k, std::uint32_t s, const Poly& a) {
    if (s == 0) return {};
    Poly out = a;
    for (auto& v : out.c) v = k.mul(s, v);
    return poly_normalize(std::move(out.c));
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& k, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw domain_error("poly_divmod: division by the zero polynomial");
    if (num.degree() < den.degree()) return {Poly::zero(), num};
    std::uint32_t lead_inv = k.inv(den.lead());
    std::vector<std::uint32_t> rem = num.c;
    std::vector<std::uint32_t> quo(num.c.size() - den.c.size() + 1, 0);
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        std::uint32_t top = rem[shift + den.c.size() - 1];
        if (top == 0) continue;
        std::uint32_t q = k.mul(top, lead_inv);
        quo[shift] = q;
        for (std::size_t i = 0; i < den.c.size(); ++i)
            rem[shift + i] = k.sub(rem[shift + i], k.mul(q, den.c[i]));
    }
    return {poly_normalize(std::move(quo)), poly_normalize(std::move(rem))};
}

bool poly_is_unit(const Poly& a) { return a.degree() == 0; }

namespace {

struct TermParser {
    std::string_view s;
    std::size_t pos = 0;
    const PrimeField& k;

    explicit TermParser(const PrimeField& field, std::string_view text) : s(text), k(field) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw domain_error("polynomial parse error at position " + std::to_string(pos) + ": " + what +
                           " in '" + std::string(s) + "'");
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected a number");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000ull) fail("number too large");
            ++pos;
        }
        return v;
    }

    bool at_var() {
        skip_ws();
        return pos < s.size() && (s[pos] == 'X' || s[pos] == 'x');
    }

    // factor := INT | X [^ INT]; accumulates into (coeff, exp)
    void parse_factor(std::uint32_t& coeff, std::uint64_t& exp) {
        skip_ws();
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            coeff = k.mul(coeff, k.from_int((long long)parse_uint()));
            return;
        }
        if (!at_var()) fail("expected a coefficient or X");
        ++pos;
        if (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            fail("unexpected digit after X (univariate input)");
        std::uint64_t e = 1;
        if (peek() == '^') {
            ++pos;
            e = parse_uint();
            if (e > 4096) fail("exponent too large");
        }
        exp += e;
    }

    // term := factor (['*'] factor)*
    void parse_term(std::uint32_t& coeff, std::uint64_t& exp) {
        parse_factor(coeff, exp);
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                parse_factor(coeff, exp);
            } else if (c == 'X' || c == 'x') {
                parse_factor(coeff, exp); // implicit product, e.g. "2X"
            } else {
                break;
            }
        }
    }
};

} // namespace

Poly poly_parse(const PrimeField& k, std::string_view text) {
    TermParser p(k, text);
    std::vector<std::uint32_t> coeffs;
    bool first = true;
    while (!p.eof()) {
        bool negative = false;
        char c = p.peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++p.pos;
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        first = false;
        std::uint32_t coeff = 1;
        std::uint64_t exp = 0;
        p.parse_term(coeff, exp);
        if (negative) coeff = k.neg(coeff);
        if (exp >= coeffs.size()) coeffs.resize(exp + 1, 0);
        coeffs[exp] = k.add(coeffs[exp], coeff);
    }
    if (first) throw domain_error("polynomial parse error: empty input");
    return poly_normalize(std::move(coeffs));
}

std::string poly_str(const PrimeField& k, const Poly& a) {
    (void)k;
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        std::uint32_t v = a.c[i];
        if (v == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << v;
        } else {
            if (v != 1) os << v << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly2 Poly2::constant(std::uint32_t v) {
    Poly2 p;
    if (v != 0) p.terms[{0, 0}] = v;
    return p;
}

Poly2 Poly2::var(int which) { return monomial(1, which == 1 ? 1 : 0, which == 2 ? 1 : 0); }

Poly2 Poly2::monomial(std::uint32_t coeff, std::uint32_t e1, std::uint32_t e2) {
    Poly2 p;
    if (coeff != 0) p.terms[{e1, e2}] = coeff;
    return p;
}

Poly2 poly2_add(const PrimeField& k, const Poly2& a, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [e, v] : b.terms) {
        std::uint32_t s = k.add(out.terms.count(e) ? out.terms[e] : 0, v);
        if (s == 0)
            out.terms.erase(e);
        else
            out.terms[e] = s;
    }
    return out;
}

Poly2 poly2_neg(const PrimeField& k, const Poly2& a) {
    Poly2 out = a;
    for (auto& [e, v] : out.terms) v = k.neg(v);
    return out;
}

Poly2 poly2_sub(const PrimeField& k, const Poly2& a, const Poly2& b) {
    return poly2_add(k, a, poly2_neg(k, b));
}

Poly2 poly2_mul(const PrimeField& k, const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ea, va] : a.terms)
        for (const auto& [eb, vb] : b.terms) {
            auto e = std::make_pair(ea.first + eb.first, ea.second + eb.second);
            std::uint32_t s = k.add(out.terms.count(e) ? out.terms[e] : 0, k.mul(va, vb));
            if (s == 0)
                out.terms.erase(e);
            else
                out.terms[e] = s;
        }
    return out;
}

Poly2 poly2_scale(const PrimeField& k, std::uint32_t s, const Poly2& a) {
    Poly2 out;
    if (s == 0) return out;
    for (const auto& [e, v] : a.terms) {
        std::uint32_t w = k.mul(s, v);
        if (w != 0) out.terms[e] = w;
    }
    return out;
}

std::string poly2_str(const PrimeField& k, const Poly2& a) {
    (void)k;
    if (a.is_zero()) return "0";
    // descending by total degree, then by e1
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>> ts(a.terms.begin(),
                                                                                      a.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
        auto tl = l.first.first + l.first.second, tr = r.first.first + r.first.second;
        if (tl != tr) return tl > tr;
        return l.first.first > r.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : ts) {
        if (!first) os << "+";
        first = false;
        bool printed = false;
        if (v != 1 || (e.first == 0 && e.second == 0)) {
            os << v;
            printed = true;
        }
        for (int which = 1; which <= 2; ++which) {
            std::uint32_t exp = which == 1 ? e.first : e.second;
            if (exp == 0) continue;
            if (printed) os << "*";
            os << "X" << which;
            if (exp > 1) os << "^" << exp;
            printed = true;
        }
    }
    return os.str();
}

} // namespace pline
