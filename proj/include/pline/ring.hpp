#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "pline/errors.hpp"

namespace pline {

/// Element of a finite ring: a stable index in 0..|R|-1.
/// Index 0 is zero and index 1 is one (when 1 != 0).
using Elt = std::uint32_t;

/// Declarative description of a ring, ingested from JSON.
struct RingSpec {
    enum class Kind { Zn, QuotientPoly, Matrix, Product, Poly };

    Kind kind = Kind::Zn;
    std::uint64_t n = 1;        // Zn modulus
    std::vector<RingSpec> sub;  // base ring (QuotientPoly/Matrix/Poly) or product factors
    std::vector<Elt> modulus;   // QuotientPoly coefficients, ascending degree
    int dim = 2;                // Matrix
    int vars = 1;               // Poly

    static RingSpec zn(std::uint64_t n);
    static RingSpec quotient_poly(RingSpec base, std::vector<Elt> modulus);
    static RingSpec matrix(RingSpec base, int dim = 2);
    static RingSpec product(std::vector<RingSpec> factors);
    static RingSpec poly(RingSpec base, int vars = 1);

    /// Parse a JSON document like {"type":"Zn","n":4} or
    /// {"type":"quotientpoly","base":{"type":"Zn","n":2},"modulus":[0,0,1]}.
    static RingSpec from_json_text(const std::string& text);
    std::string json_text() const;

    /// Short human-readable name, e.g. "Z/4", "Z/2[x]/(x^2+x+1)", "M2(Z/2)".
    std::string display_name() const;
};

/// A finite associative ring with 1 (the trivial ring 1 = 0 included).
/// Elements are dense indices; arithmetic is table-backed for |R| <= 256.
/// Instances are immutable after construction and safe to share across
/// threads. Construct through ring_create only.
class FiniteRing {
  public:
    virtual ~FiniteRing() = default;

    std::uint32_t size() const { return size_; }
    bool trivial() const { return size_ == 1; } // the ring with 1 = 0
    Elt zero() const { return 0; }
    Elt one() const { return trivial() ? 0u : 1u; }
    bool commutative() const { return commutative_; }
    /// True for ring classes known to have stable rank 2 (matrix rings
    /// over fields); enables the unimodularity shortcut for admissibility.
    bool stable_rank2_known() const { return stable_rank2_; }
    const std::string& name() const { return name_; }
    const RingSpec& spec() const { return spec_; }

    Elt add(Elt a, Elt b) const {
        return add_tab_.empty() ? pub_add(a, b) : add_tab_[(std::size_t)a * size_ + b];
    }
    Elt mul(Elt a, Elt b) const {
        return mul_tab_.empty() ? pub_mul(a, b) : mul_tab_[(std::size_t)a * size_ + b];
    }
    Elt neg(Elt a) const { return neg_tab_.empty() ? pub_neg(a) : neg_tab_[a]; }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

    bool is_unit(Elt a) const { return unit_[a] != 0; }
    /// Two-sided inverse; throws domain_error on a non-unit.
    Elt unit_inverse(Elt a) const;
    /// All invertible elements, ascending by index.
    std::vector<Elt> units() const;

    /// True iff a*x' + b*y' = 1 is solvable (right multipliers).
    virtual bool pair_unimodular(Elt a, Elt b) const;

    std::string elt_str(Elt a) const { return elt_str_raw(to_raw(a)); }

    /// Kind-specific element construction from parts (Zn: {value};
    /// QuotientPoly: base coefficients ascending; Matrix: 4 entries
    /// row-major; Product: one element per factor).
    Elt encode(const std::vector<Elt>& parts) const { return to_pub(encode_raw(parts)); }
    std::vector<Elt> decode(Elt a) const { return decode_raw(to_raw(a)); }

  protected:
    FiniteRing(std::uint32_t size, bool commutative, bool stable_rank2, std::string name, RingSpec spec);

    // Natural (mixed-radix) encoding. Public indices apply the
    // transposition 1 <-> raw(one) on top, so index 1 is always one.
    virtual Elt raw_add(Elt a, Elt b) const = 0;
    virtual Elt raw_neg(Elt a) const = 0;
    virtual Elt raw_mul(Elt a, Elt b) const = 0;
    virtual Elt raw_one() const = 0;
    virtual bool raw_is_unit(Elt a) const; // default: exhaustive two-sided scan
    virtual Elt raw_inverse(Elt a) const;  // default: exhaustive scan
    virtual std::string elt_str_raw(Elt a) const = 0;
    virtual Elt encode_raw(const std::vector<Elt>& parts) const = 0;
    virtual std::vector<Elt> decode_raw(Elt a) const = 0;

    /// Finish construction: computes the index transposition, arithmetic
    /// tables (|R| <= 256) and the unit table. Must be called exactly once.
    void finalize();

    Elt to_raw(Elt pub) const {
        if (one_raw_ <= 1) return pub; // includes the trivial ring, where one is zero
        if (pub == 1) return one_raw_;
        if (pub == one_raw_) return 1;
        return pub;
    }
    Elt to_pub(Elt raw) const { return to_raw(raw); } // the transposition is an involution

  private:
    Elt pub_add(Elt a, Elt b) const { return to_pub(raw_add(to_raw(a), to_raw(b))); }
    Elt pub_mul(Elt a, Elt b) const { return to_pub(raw_mul(to_raw(a), to_raw(b))); }
    Elt pub_neg(Elt a) const { return to_pub(raw_neg(to_raw(a))); }

    std::uint32_t size_;
    bool commutative_;
    bool stable_rank2_;
    std::string name_;
    RingSpec spec_;
    Elt one_raw_ = 1;
    std::vector<Elt> add_tab_, mul_tab_, neg_tab_; // built when size <= 256
    std::vector<std::uint8_t> unit_;
    std::vector<Elt> inv_; // UINT32_MAX for non-units
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Exact polynomial ring F_p[X] or F_p[X1,X2]; not enumerable.
struct PolyDomain {
    std::uint32_t p = 2;
    int vars = 1;
};

using Ring = std::variant<RingPtr, PolyDomain>;

/// Build a ring from its spec. Throws construction_error on malformed
/// specs. Poly specs yield a PolyDomain, everything else a FiniteRing.
Ring ring_create(const RingSpec& spec);

/// As ring_create but requires a finite ring; throws capability_error
/// for polynomial-ring specs.
RingPtr ring_create_finite(const RingSpec& spec);

/// True iff r is a (finite) field: commutative, 1 != 0, every nonzero
/// element a unit.
bool ring_is_field(const FiniteRing& r);

} // namespace pline
