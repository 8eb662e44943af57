#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pline/errors.hpp"

namespace pline {

// Degree of the zero polynomial. Far below any attainable degree; use
// deg_add for the multiplicative degree law.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 2;

inline constexpr int deg_add(int a, int b) {
    return (a == kNegInfDeg || b == kNegInfDeg) ? kNegInfDeg : a + b;
}

/// Arithmetic in the prime field F_p, elements represented as 0..p-1.
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t)a * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t from_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

  private:
    std::uint32_t p_;
};

/// Univariate polynomial over a prime field: coefficients ascending by
/// degree, normalized (no trailing zeros; zero polynomial = empty vector).
struct Poly {
    std::vector<std::uint32_t> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return c.empty() ? kNegInfDeg : (int)c.size() - 1; }
    std::uint32_t lead() const { return c.empty() ? 0u : c.back(); }

    bool operator==(const Poly& o) const = default;

    static Poly zero() { return {}; }
    static Poly constant(std::uint32_t v) { return v == 0 ? Poly{} : Poly{{v}}; }
    // coefficient * X^k
    static Poly monomial(std::uint32_t coeff, std::size_t k);
};

Poly poly_normalize(std::vector<std::uint32_t> coeffs);
Poly poly_add(const PrimeField& k, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& k, const Poly& a, const Poly& b);
Poly poly_neg(const PrimeField& k, const Poly& a);
Poly poly_mul(const PrimeField& k, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& k, std::uint32_t s, const Poly& a);

/// Long division: num = den*quotient + remainder, deg remainder < deg den.
/// Throws domain_error when den = 0.
std::pair<Poly, Poly> poly_divmod(const PrimeField& k, const Poly& num, const Poly& den);

bool poly_is_unit(const Poly& a); // nonzero constant

/// Parse "X^3+2*X+1" style input (ASCII, caret powers, optional '*').
Poly poly_parse(const PrimeField& k, std::string_view text);
std::string poly_str(const PrimeField& k, const Poly& a);

/// Sparse bivariate polynomial over a prime field, keyed by exponent
/// pairs (e1, e2) for X1^e1 * X2^e2. Zero coefficients are never stored.
struct Poly2 {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Poly2& o) const = default;

    static Poly2 zero() { return {}; }
    static Poly2 constant(std::uint32_t v);
    static Poly2 var(int which); // 1 -> X1, 2 -> X2
    static Poly2 monomial(std::uint32_t coeff, std::uint32_t e1, std::uint32_t e2);
};

Poly2 poly2_add(const PrimeField& k, const Poly2& a, const Poly2& b);
Poly2 poly2_sub(const PrimeField& k, const Poly2& a, const Poly2& b);
Poly2 poly2_neg(const PrimeField& k, const Poly2& a);
Poly2 poly2_mul(const PrimeField& k, const Poly2& a, const Poly2& b);
Poly2 poly2_scale(const PrimeField& k, std::uint32_t s, const Poly2& a);
std::string poly2_str(const PrimeField& k, const Poly2& a);

} // namespace pline
