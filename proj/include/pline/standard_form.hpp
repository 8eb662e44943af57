#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pline/poly.hpp"

namespace pline {

/// 2x2 matrix over K[X], row-major [[a,b],[c,d]].
struct PolyMat2 {
    Poly a, b, c, d;

    bool operator==(const PolyMat2&) const = default;
};

PolyMat2 pm_identity();
PolyMat2 pm_mul(const PrimeField& k, const PolyMat2& x, const PolyMat2& y);
PolyMat2 pm_e(const PrimeField& k, const Poly& t);     // E(t) = [[t,1],[-1,0]]
PolyMat2 pm_b12(const Poly& t);                        // [[1,t],[0,1]]
PolyMat2 pm_b21(const Poly& t);                        // [[1,0],[t,1]]
PolyMat2 pm_diag(std::uint32_t u, std::uint32_t v);    // scalar diagonal
PolyMat2 pm_pow(const PrimeField& k, const PolyMat2& m, std::uint32_t n);
Poly pm_det(const PrimeField& k, const PolyMat2& m);
std::string pm_str(const PrimeField& k, const PolyMat2& m);

/// diag(u,v) * E(t_n) * ... * E(t_1) with u,v nonzero scalars and the
/// middle parameters t_2..t_{n-1} of degree >= 1. params[0] = t_1.
/// Canonical side condition: for n = 2 the parameters are not both 0.
struct StandardForm {
    std::uint32_t u = 1, v = 1;
    std::vector<Poly> params;

    std::size_t length() const { return params.size(); }
    bool operator==(const StandardForm&) const = default;
};

PolyMat2 sf_compose(const PrimeField& k, const StandardForm& sf);

struct DecomposeStats {
    // degree of the divisor at every genuine polynomial-division step;
    // the termination measure, strictly decreasing
    std::vector<int> division_degrees;
    std::uint32_t steps = 0; // total E-extractions including the constant endgame
};

/// Unique standard form of an invertible matrix over K[X], computed by
/// peeling E-factors with Euclidean division on the first column,
/// finishing constant remainders with E(0)-twists, and normalizing the
/// word until every middle parameter has degree >= 1. The result
/// re-composes to the input exactly (self-checked).
StandardForm sf_decompose(const PrimeField& k, const PolyMat2& m, DecomposeStats* stats = nullptr);

/// Modified standard form: identical for non-diagonal matrices; a
/// diagonal diag(u,v) becomes diag(-u,-v)*E(0)*E(0), so n >= 1 always.
StandardForm sf_modified(const PrimeField& k, const StandardForm& sf);

std::string sf_str(const PrimeField& k, const StandardForm& sf);

/// Word-length distance certificate: decompose(E(t)^m) must come back
/// as the parameter word (t,...,t) of length m with trivial diagonal;
/// uniqueness of the standard form makes that word length minimal, so
/// the certificate pins dist(q_0, q_m) = m on the projective line over
/// K[X]. Requires t nonzero and not a unit (deg t >= 1).
struct DistanceCertificate {
    std::uint32_t m = 0;
    bool ok = false;
    StandardForm form;
};
DistanceCertificate distance_certificate(const PrimeField& k, const Poly& t, std::uint32_t m);

/// 2x2 matrices over K[X1,X2] (sparse entries), plus the power-identity
/// report for the matrix [[1+X1X2, X1^2],[-X2^2, 1-X1X2]].
struct BivarMat2 {
    Poly2 a, b, c, d;

    bool operator==(const BivarMat2&) const = default;
};
BivarMat2 bm_identity();
BivarMat2 bm_mul(const PrimeField& k, const BivarMat2& x, const BivarMat2& y);
Poly2 bm_det(const PrimeField& k, const BivarMat2& m);

struct XyReport {
    std::uint32_t p = 0, nmax = 0;
    bool power_identity_ok = false;      // A^n equals the displayed closed form, n = 1..nmax
    bool det_ok = false;                 // det A = 1
    bool identity_iff_char_divides = false;
    bool inverse_ok = false;             // closed-form inverse checks out
    std::string conjugate_b12;           // A * B12(1) * A^-1, printed entries
    std::vector<std::uint32_t> identity_at; // n <= nmax with A^n = I
};
XyReport xy_matrix_check(std::uint32_t p, std::uint32_t nmax);

} // namespace pline
