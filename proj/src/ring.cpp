#include "pline/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "pline/poly.hpp"

namespace pline {

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Variable-length polynomials over a finite *field* given by its ring
// handle (coefficients are public element indices, ascending degree,
// normalized). Used for quotient-ring arithmetic and unit tests.
struct BasePoly {
    static void strip(const FiniteRing& f, std::vector<Elt>& p) {
        while (!p.empty() && p.back() == f.zero()) p.pop_back();
    }
    static int deg(const std::vector<Elt>& p) { return (int)p.size() - 1; } // -1 for zero

    static std::vector<Elt> mul(const FiniteRing& f, const std::vector<Elt>& a, const std::vector<Elt>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Elt> out(a.size() + b.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        strip(f, out);
        return out;
    }

    static std::vector<Elt> sub(const FiniteRing& f, std::vector<Elt> a, const std::vector<Elt>& b) {
        if (a.size() < b.size()) a.resize(b.size(), f.zero());
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
        strip(f, a);
        return a;
    }

    // num = den*q + r with deg r < deg den; den != 0
    static std::pair<std::vector<Elt>, std::vector<Elt>> divmod(const FiniteRing& f, std::vector<Elt> num,
                                                                const std::vector<Elt>& den) {
        Elt lead_inv = f.unit_inverse(den.back());
        std::vector<Elt> quo;
        if (num.size() >= den.size()) quo.assign(num.size() - den.size() + 1, f.zero());
        while (num.size() >= den.size() && !num.empty()) {
            std::size_t shift = num.size() - den.size();
            Elt q = f.mul(num.back(), lead_inv);
            quo[shift] = q;
            for (std::size_t i = 0; i < den.size(); ++i)
                num[shift + i] = f.sub(num[shift + i], f.mul(q, den[i]));
            strip(f, num);
        }
        return {std::move(quo), std::move(num)};
    }

    static std::vector<Elt> gcd(const FiniteRing& f, std::vector<Elt> a, std::vector<Elt> b) {
        while (!b.empty()) {
            auto r = divmod(f, std::move(a), b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }
};

} // namespace

// ---------------------------------------------------------------------------
// FiniteRing base

FiniteRing::FiniteRing(std::uint32_t size, bool commutative, bool stable_rank2, std::string name,
                       RingSpec spec)
    : size_(size), commutative_(commutative), stable_rank2_(stable_rank2), name_(std::move(name)),
      spec_(std::move(spec)) {}

void FiniteRing::finalize() {
    one_raw_ = trivial() ? 0u : raw_one();
    if (size_ > 1 && one_raw_ == 0) throw internal_error(name_ + ": one encoded as zero");

    if (size_ <= 256) {
        add_tab_.resize((std::size_t)size_ * size_);
        mul_tab_.resize((std::size_t)size_ * size_);
        neg_tab_.resize(size_);
        for (Elt a = 0; a < size_; ++a) {
            neg_tab_[a] = pub_neg(a);
            for (Elt b = 0; b < size_; ++b) {
                add_tab_[(std::size_t)a * size_ + b] = pub_add(a, b);
                mul_tab_[(std::size_t)a * size_ + b] = pub_mul(a, b);
            }
        }
    }

    unit_.resize(size_);
    inv_.assign(size_, UINT32_MAX);
    for (Elt a = 0; a < size_; ++a) {
        Elt r = to_raw(a);
        if (raw_is_unit(r)) {
            unit_[a] = 1;
            inv_[a] = to_pub(raw_inverse(r));
        }
    }
}

bool FiniteRing::raw_is_unit(Elt a) const {
    for (Elt b = 0; b < size_; ++b)
        if (raw_mul(a, b) == one_raw_ && raw_mul(b, a) == one_raw_) return true;
    return false;
}

Elt FiniteRing::raw_inverse(Elt a) const {
    for (Elt b = 0; b < size_; ++b)
        if (raw_mul(a, b) == one_raw_ && raw_mul(b, a) == one_raw_) return b;
    throw domain_error(name_ + ": element " + elt_str_raw(a) + " is not a unit");
}

Elt FiniteRing::unit_inverse(Elt a) const {
    if (!is_unit(a)) throw domain_error(name_ + ": unit_inverse of non-unit " + elt_str(a));
    return inv_[a];
}

std::vector<Elt> FiniteRing::units() const {
    std::vector<Elt> out;
    for (Elt a = 0; a < size_; ++a)
        if (unit_[a]) out.push_back(a);
    return out;
}

bool FiniteRing::pair_unimodular(Elt a, Elt b) const {
    // a*x' + b*y' = 1 solvable <=> 1 - a*x' hits the image of y' -> b*y'
    std::vector<std::uint8_t> img(size_, 0);
    for (Elt y = 0; y < size_; ++y) img[mul(b, y)] = 1;
    for (Elt x = 0; x < size_; ++x)
        if (img[sub(one(), mul(a, x))]) return true;
    return false;
}

bool ring_is_field(const FiniteRing& r) {
    if (!r.commutative() || r.trivial()) return false;
    for (Elt a = 1; a < r.size(); ++a)
        if (!r.is_unit(a)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Z/n

namespace {

class ZnRing : public FiniteRing {
  public:
    ZnRing(std::uint64_t n, RingSpec spec)
        : FiniteRing((std::uint32_t)n, true, false, "Z/" + std::to_string(n), std::move(spec)),
          n_((std::uint32_t)n) {}

    bool pair_unimodular(Elt a, Elt b) const override {
        return gcd_u64(gcd_u64(a, b), n_) == 1 || n_ == 1;
    }

  protected:
    Elt raw_add(Elt a, Elt b) const override {
        std::uint32_t s = a + b;
        return s >= n_ ? s - n_ : s;
    }
    Elt raw_neg(Elt a) const override { return a == 0 ? 0 : n_ - a; }
    Elt raw_mul(Elt a, Elt b) const override {
        return (Elt)((std::uint64_t)a * b % n_);
    }
    Elt raw_one() const override { return 1; }
    bool raw_is_unit(Elt a) const override { return n_ == 1 || gcd_u64(a, n_) == 1; }
    Elt raw_inverse(Elt a) const override {
        if (n_ == 1) return 0;
        long long t = 0, newt = 1, r = n_, newr = a;
        while (newr != 0) {
            long long q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        if (r != 1) throw domain_error(name() + ": " + std::to_string(a) + " is not a unit");
        if (t < 0) t += n_;
        return (Elt)t;
    }
    std::string elt_str_raw(Elt a) const override { return std::to_string(a); }
    Elt encode_raw(const std::vector<Elt>& parts) const override {
        if (parts.size() != 1) throw domain_error("Zn encode expects one value");
        return (Elt)(parts[0] % n_);
    }
    std::vector<Elt> decode_raw(Elt a) const override { return {a}; }

  private:
    std::uint32_t n_;
};

// ---------------------------------------------------------------------------
// K[x]/(m) for a finite field K and monic m with deg m >= 1

class QuotientPolyRing : public FiniteRing {
  public:
    QuotientPolyRing(RingPtr base, std::vector<Elt> monic_modulus, std::uint32_t size, std::string name,
                     RingSpec spec)
        : FiniteRing(size, true, false, std::move(name), std::move(spec)), base_(std::move(base)),
          mod_(std::move(monic_modulus)), d_((std::uint32_t)mod_.size() - 1), q_(base_->size()) {}

  protected:
    std::vector<Elt> digits(Elt raw) const {
        std::vector<Elt> out(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            out[i] = raw % q_;
            raw /= q_;
        }
        return out;
    }
    Elt undigits(const std::vector<Elt>& c) const {
        Elt raw = 0;
        for (std::uint32_t i = d_; i-- > 0;) raw = raw * q_ + (i < c.size() ? c[i] : 0);
        return raw;
    }

    Elt raw_add(Elt a, Elt b) const override {
        auto x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < d_; ++i) x[i] = base_->add(x[i], y[i]);
        return undigits(x);
    }
    Elt raw_neg(Elt a) const override {
        auto x = digits(a);
        for (auto& v : x) v = base_->neg(v);
        return undigits(x);
    }
    Elt raw_mul(Elt a, Elt b) const override {
        auto x = digits(a), y = digits(b);
        std::vector<Elt> conv(2 * d_ - 1, base_->zero());
        for (std::uint32_t i = 0; i < d_; ++i)
            for (std::uint32_t j = 0; j < d_; ++j)
                conv[i + j] = base_->add(conv[i + j], base_->mul(x[i], y[j]));
        // reduce by the monic modulus
        for (std::uint32_t k = 2 * d_ - 2; k >= d_ && k < conv.size(); --k) {
            Elt f = conv[k];
            if (f == base_->zero()) continue;
            conv[k] = base_->zero();
            for (std::uint32_t i = 0; i < d_; ++i)
                conv[k - d_ + i] = base_->sub(conv[k - d_ + i], base_->mul(f, mod_[i]));
        }
        conv.resize(d_);
        return undigits(conv);
    }
    Elt raw_one() const override {
        std::vector<Elt> c(d_, base_->zero());
        c[0] = base_->one();
        return undigits(c);
    }
    bool raw_is_unit(Elt a) const override {
        auto c = digits(a);
        BasePoly::strip(*base_, c);
        if (c.empty()) return false;
        return BasePoly::deg(BasePoly::gcd(*base_, mod_, c)) == 0;
    }
    Elt raw_inverse(Elt a) const override {
        // extended Euclid against the modulus
        auto c = digits(a);
        BasePoly::strip(*base_, c);
        std::vector<Elt> r0 = mod_, r1 = c;
        std::vector<Elt> t0, t1 = {base_->one()};
        while (!r1.empty()) {
            auto [q, r] = BasePoly::divmod(*base_, r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            auto t2 = BasePoly::sub(*base_, t0, BasePoly::mul(*base_, q, t1));
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (BasePoly::deg(r0) != 0)
            throw domain_error(name() + ": element is not a unit");
        Elt scale = base_->unit_inverse(r0[0]);
        for (auto& v : t0) v = base_->mul(scale, v);
        return undigits(t0);
    }
    std::string elt_str_raw(Elt a) const override {
        auto c = digits(a);
        std::ostringstream os;
        bool first = true;
        for (std::uint32_t i = d_; i-- > 0;) {
            if (c[i] == base_->zero()) continue;
            if (!first) os << "+";
            first = false;
            std::string lbl = base_->elt_str(c[i]);
            if (i == 0) {
                os << lbl;
            } else {
                if (c[i] != base_->one()) os << (lbl.find('+') == std::string::npos ? lbl : "(" + lbl + ")") << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << base_->elt_str(base_->zero());
        return os.str();
    }
    Elt encode_raw(const std::vector<Elt>& parts) const override {
        if (parts.size() > d_) throw domain_error(name() + ": too many coefficients");
        for (Elt v : parts)
            if (v >= q_) throw domain_error(name() + ": coefficient out of range");
        return undigits(parts);
    }
    std::vector<Elt> decode_raw(Elt a) const override { return digits(a); }

  private:
    RingPtr base_;
    std::vector<Elt> mod_; // monic, length d_+1
    std::uint32_t d_, q_;
};

// ---------------------------------------------------------------------------
// M2(B)

class MatrixRingRing : public FiniteRing {
  public:
    MatrixRingRing(RingPtr base, std::uint32_t size, std::string name, RingSpec spec)
        : FiniteRing(size, base->trivial(), ring_is_field(*base), std::move(name), std::move(spec)),
          base_(std::move(base)), q_(base_->size()) {}

  protected:
    struct M {
        Elt a, b, c, d;
    };
    M unpack(Elt raw) const {
        M m;
        m.d = raw % q_;
        raw /= q_;
        m.c = raw % q_;
        raw /= q_;
        m.b = raw % q_;
        raw /= q_;
        m.a = raw;
        return m;
    }
    Elt pack(const M& m) const { return ((m.a * q_ + m.b) * q_ + m.c) * q_ + m.d; }

    Elt raw_add(Elt x, Elt y) const override {
        M u = unpack(x), v = unpack(y);
        return pack({base_->add(u.a, v.a), base_->add(u.b, v.b), base_->add(u.c, v.c), base_->add(u.d, v.d)});
    }
    Elt raw_neg(Elt x) const override {
        M u = unpack(x);
        return pack({base_->neg(u.a), base_->neg(u.b), base_->neg(u.c), base_->neg(u.d)});
    }
    Elt raw_mul(Elt x, Elt y) const override {
        M u = unpack(x), v = unpack(y);
        return pack({base_->add(base_->mul(u.a, v.a), base_->mul(u.b, v.c)),
                     base_->add(base_->mul(u.a, v.b), base_->mul(u.b, v.d)),
                     base_->add(base_->mul(u.c, v.a), base_->mul(u.d, v.c)),
                     base_->add(base_->mul(u.c, v.b), base_->mul(u.d, v.d))});
    }
    Elt raw_one() const override { return pack({base_->one(), base_->zero(), base_->zero(), base_->one()}); }

    bool raw_is_unit(Elt x) const override {
        M u = unpack(x);
        if (base_->commutative())
            return base_->is_unit(base_->sub(base_->mul(u.a, u.d), base_->mul(u.b, u.c)));
        // injectivity of the row action (v1,v2) -> (v1,v2)*M; finite => bijective
        for (Elt v1 = 0; v1 < q_; ++v1)
            for (Elt v2 = 0; v2 < q_; ++v2) {
                if (v1 == 0 && v2 == 0) continue;
                if (base_->add(base_->mul(v1, u.a), base_->mul(v2, u.c)) == base_->zero() &&
                    base_->add(base_->mul(v1, u.b), base_->mul(v2, u.d)) == base_->zero())
                    return false;
            }
        return true;
    }
    Elt raw_inverse(Elt x) const override {
        M u = unpack(x);
        if (base_->commutative()) {
            Elt det = base_->sub(base_->mul(u.a, u.d), base_->mul(u.b, u.c));
            Elt di = base_->unit_inverse(det);
            return pack({base_->mul(di, u.d), base_->mul(di, base_->neg(u.b)),
                         base_->mul(di, base_->neg(u.c)), base_->mul(di, u.a)});
        }
        // rows of the inverse solve v*M = e_i
        Elt r1a = 0, r1b = 0, r2a = 0, r2b = 0;
        bool f1 = false, f2 = false;
        for (Elt v1 = 0; v1 < q_ && !(f1 && f2); ++v1)
            for (Elt v2 = 0; v2 < q_; ++v2) {
                Elt w1 = base_->add(base_->mul(v1, u.a), base_->mul(v2, u.c));
                Elt w2 = base_->add(base_->mul(v1, u.b), base_->mul(v2, u.d));
                if (!f1 && w1 == base_->one() && w2 == base_->zero()) {
                    r1a = v1;
                    r1b = v2;
                    f1 = true;
                }
                if (!f2 && w1 == base_->zero() && w2 == base_->one()) {
                    r2a = v1;
                    r2b = v2;
                    f2 = true;
                }
            }
        if (!f1 || !f2) throw domain_error(name() + ": element is not a unit");
        return pack({r1a, r1b, r2a, r2b});
    }
    std::string elt_str_raw(Elt x) const override {
        M u = unpack(x);
        return "[[" + base_->elt_str(u.a) + "," + base_->elt_str(u.b) + "],[" + base_->elt_str(u.c) + "," +
               base_->elt_str(u.d) + "]]";
    }
    Elt encode_raw(const std::vector<Elt>& parts) const override {
        if (parts.size() != 4) throw domain_error(name() + ": encode expects 4 entries");
        for (Elt v : parts)
            if (v >= q_) throw domain_error(name() + ": entry out of range");
        return pack({parts[0], parts[1], parts[2], parts[3]});
    }
    std::vector<Elt> decode_raw(Elt x) const override {
        M u = unpack(x);
        return {u.a, u.b, u.c, u.d};
    }

  private:
    RingPtr base_;
    std::uint32_t q_;
};

// ---------------------------------------------------------------------------
// R1 x R2 x ... (componentwise)

class ProductRing : public FiniteRing {
  public:
    ProductRing(std::vector<RingPtr> factors, std::uint32_t size, bool commutative, std::string name,
                RingSpec spec)
        : FiniteRing(size, commutative, false, std::move(name), std::move(spec)),
          factors_(std::move(factors)) {}

    bool pair_unimodular(Elt a, Elt b) const override {
        auto x = decode_raw(to_raw(a)), y = decode_raw(to_raw(b));
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (!factors_[i]->pair_unimodular(x[i], y[i])) return false;
        return true;
    }

  protected:
    Elt map2(Elt x, Elt y, Elt (FiniteRing::*op)(Elt, Elt) const) const {
        auto u = decode_raw(x), v = decode_raw(y);
        for (std::size_t i = 0; i < factors_.size(); ++i) u[i] = (factors_[i].get()->*op)(u[i], v[i]);
        return encode_parts(u);
    }
    Elt raw_add(Elt x, Elt y) const override { return map2(x, y, &FiniteRing::add); }
    Elt raw_mul(Elt x, Elt y) const override { return map2(x, y, &FiniteRing::mul); }
    Elt raw_neg(Elt x) const override {
        auto u = decode_raw(x);
        for (std::size_t i = 0; i < factors_.size(); ++i) u[i] = factors_[i]->neg(u[i]);
        return encode_parts(u);
    }
    Elt raw_one() const override {
        std::vector<Elt> u(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) u[i] = factors_[i]->one();
        return encode_parts(u);
    }
    bool raw_is_unit(Elt x) const override {
        auto u = decode_raw(x);
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (!factors_[i]->is_unit(u[i])) return false;
        return true;
    }
    Elt raw_inverse(Elt x) const override {
        auto u = decode_raw(x);
        for (std::size_t i = 0; i < factors_.size(); ++i) u[i] = factors_[i]->unit_inverse(u[i]);
        return encode_parts(u);
    }
    std::string elt_str_raw(Elt x) const override {
        auto u = decode_raw(x);
        std::string out = "(";
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (i) out += ",";
            out += factors_[i]->elt_str(u[i]);
        }
        return out + ")";
    }
    Elt encode_raw(const std::vector<Elt>& parts) const override {
        if (parts.size() != factors_.size()) throw domain_error(name() + ": wrong number of components");
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] >= factors_[i]->size()) throw domain_error(name() + ": component out of range");
        return encode_parts(parts);
    }
    std::vector<Elt> decode_raw(Elt x) const override {
        std::vector<Elt> out(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            out[i] = x % factors_[i]->size();
            x /= factors_[i]->size();
        }
        return out;
    }

  private:
    Elt encode_parts(const std::vector<Elt>& parts) const {
        Elt raw = 0;
        for (std::size_t i = factors_.size(); i-- > 0;) raw = raw * factors_[i]->size() + parts[i];
        return raw;
    }
    std::vector<RingPtr> factors_;
};

// finalize() is protected; the factory reaches it through a thin subclass
template <class R> struct Built : R {
    using R::R;
    using R::finalize;
};

struct Finalizer {
    template <class R, class... Args>
    static RingPtr make(Args&&... args) {
        auto ring = std::make_shared<Built<R>>(std::forward<Args>(args)...);
        ring->finalize();
        return ring;
    }
};

constexpr std::uint64_t kMaxRingSize = 65536;

} // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::zn(std::uint64_t n) {
    RingSpec s;
    s.kind = Kind::Zn;
    s.n = n;
    return s;
}

RingSpec RingSpec::quotient_poly(RingSpec base, std::vector<Elt> modulus) {
    RingSpec s;
    s.kind = Kind::QuotientPoly;
    s.sub.push_back(std::move(base));
    s.modulus = std::move(modulus);
    return s;
}

RingSpec RingSpec::matrix(RingSpec base, int dim) {
    RingSpec s;
    s.kind = Kind::Matrix;
    s.sub.push_back(std::move(base));
    s.dim = dim;
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::Product;
    s.sub = std::move(factors);
    return s;
}

RingSpec RingSpec::poly(RingSpec base, int vars) {
    RingSpec s;
    s.kind = Kind::Poly;
    s.sub.push_back(std::move(base));
    s.vars = vars;
    return s;
}

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = (char)std::tolower((unsigned char)c);
    return s;
}

RingSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw construction_error("ring spec: expected an object with a \"type\" field");
    std::string type = lower(j.at("type").get<std::string>());
    if (type == "zn") {
        return RingSpec::zn(j.at("n").get<std::uint64_t>());
    } else if (type == "quotientpoly") {
        std::vector<Elt> mod;
        for (const auto& c : j.at("modulus")) mod.push_back(c.get<Elt>());
        return RingSpec::quotient_poly(spec_from_json(j.at("base")), std::move(mod));
    } else if (type == "matrix") {
        return RingSpec::matrix(spec_from_json(j.at("base")), j.value("dim", 2));
    } else if (type == "product") {
        std::vector<RingSpec> fs;
        for (const auto& f : j.at("factors")) fs.push_back(spec_from_json(f));
        return RingSpec::product(std::move(fs));
    } else if (type == "poly") {
        return RingSpec::poly(spec_from_json(j.at("base")), j.value("vars", 1));
    }
    throw construction_error("ring spec: unknown type \"" + type + "\"");
}

nlohmann::ordered_json spec_to_json(const RingSpec& s) {
    nlohmann::ordered_json j;
    switch (s.kind) {
    case RingSpec::Kind::Zn:
        j["type"] = "Zn";
        j["n"] = s.n;
        break;
    case RingSpec::Kind::QuotientPoly:
        j["type"] = "quotientpoly";
        j["base"] = spec_to_json(s.sub.at(0));
        j["modulus"] = s.modulus;
        break;
    case RingSpec::Kind::Matrix:
        j["type"] = "matrix";
        j["base"] = spec_to_json(s.sub.at(0));
        j["dim"] = s.dim;
        break;
    case RingSpec::Kind::Product: {
        j["type"] = "product";
        auto arr = nlohmann::ordered_json::array();
        for (const auto& f : s.sub) arr.push_back(spec_to_json(f));
        j["factors"] = arr;
        break;
    }
    case RingSpec::Kind::Poly:
        j["type"] = "poly";
        j["base"] = spec_to_json(s.sub.at(0));
        j["vars"] = s.vars;
        break;
    }
    return j;
}

} // namespace

RingSpec RingSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw construction_error(std::string("ring spec: invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

std::string RingSpec::json_text() const { return spec_to_json(*this).dump(); }

std::string RingSpec::display_name() const {
    switch (kind) {
    case Kind::Zn:
        return "Z/" + std::to_string(n);
    case Kind::QuotientPoly: {
        std::ostringstream os;
        os << sub.at(0).display_name() << "[x]/(";
        bool first = true;
        for (std::size_t i = modulus.size(); i-- > 0;) {
            if (modulus[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0) {
                os << modulus[i];
            } else {
                if (modulus[i] != 1) os << modulus[i] << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        os << ")";
        return os.str();
    }
    case Kind::Matrix:
        return "M" + std::to_string(dim) + "(" + sub.at(0).display_name() + ")";
    case Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < sub.size(); ++i) {
            if (i) out += " x ";
            out += sub[i].display_name();
        }
        return out;
    }
    case Kind::Poly:
        return "F" + std::to_string(sub.at(0).n) + (vars == 1 ? "[X]" : "[X1,X2]");
    }
    return "?";
}

// ---------------------------------------------------------------------------
// ring_create

Ring ring_create(const RingSpec& spec) {
    switch (spec.kind) {
    case RingSpec::Kind::Poly: {
        if (spec.sub.size() != 1 || spec.sub[0].kind != RingSpec::Kind::Zn)
            throw construction_error("poly ring: base must be a prime field given as Zn");
        if (spec.vars != 1 && spec.vars != 2)
            throw construction_error("poly ring: vars must be 1 or 2");
        PrimeField k((std::uint32_t)spec.sub[0].n); // validates primality
        return PolyDomain{k.p(), spec.vars};
    }
    default:
        return ring_create_finite(spec);
    }
}

RingPtr ring_create_finite(const RingSpec& spec) {
    switch (spec.kind) {
    case RingSpec::Kind::Zn: {
        if (spec.n < 1) throw construction_error("Zn: n must be >= 1");
        if (spec.n > kMaxRingSize)
            throw construction_error("Zn: n exceeds the maximum enumerable ring size " +
                                     std::to_string(kMaxRingSize));
        return Finalizer::make<ZnRing>(spec.n, spec);
    }
    case RingSpec::Kind::QuotientPoly: {
        if (spec.sub.size() != 1) throw construction_error("quotientpoly: missing base ring");
        RingPtr base = ring_create_finite(spec.sub[0]);
        if (!ring_is_field(*base))
            throw construction_error("quotientpoly: base ring " + base->name() + " is not a finite field");
        std::vector<Elt> mod = spec.modulus;
        for (Elt c : mod)
            if (c >= base->size())
                throw construction_error("quotientpoly: modulus coefficient " + std::to_string(c) +
                                         " out of range for base " + base->name());
        while (!mod.empty() && mod.back() == 0) mod.pop_back();
        if (mod.size() < 2)
            throw construction_error("quotientpoly: modulus must have degree >= 1");
        if (!base->is_unit(mod.back()))
            throw construction_error("quotientpoly: leading modulus coefficient is not a unit");
        // normalize to monic; the generated ideal is unchanged
        Elt li = base->unit_inverse(mod.back());
        for (Elt& c : mod) c = base->mul(li, c);
        std::uint32_t d = (std::uint32_t)mod.size() - 1;
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            size *= base->size();
            if (size > kMaxRingSize)
                throw construction_error("quotientpoly: ring size exceeds " + std::to_string(kMaxRingSize));
        }
        std::string name = spec.display_name();
        return Finalizer::make<QuotientPolyRing>(std::move(base), std::move(mod), (std::uint32_t)size,
                                                 std::move(name), spec);
    }
    case RingSpec::Kind::Matrix: {
        if (spec.dim != 2)
            throw construction_error("matrix ring: only dim = 2 is supported, got " +
                                     std::to_string(spec.dim));
        if (spec.sub.size() != 1) throw construction_error("matrix ring: missing base ring");
        RingPtr base = ring_create_finite(spec.sub[0]);
        std::uint64_t size = 1;
        for (int i = 0; i < 4; ++i) {
            size *= base->size();
            if (size > kMaxRingSize)
                throw construction_error("matrix ring: ring size exceeds " + std::to_string(kMaxRingSize));
        }
        std::string name = spec.display_name();
        return Finalizer::make<MatrixRingRing>(std::move(base), (std::uint32_t)size, std::move(name), spec);
    }
    case RingSpec::Kind::Product: {
        if (spec.sub.empty()) throw construction_error("product ring: needs at least one factor");
        std::vector<RingPtr> factors;
        std::uint64_t size = 1;
        bool commutative = true;
        for (const auto& f : spec.sub) {
            factors.push_back(ring_create_finite(f));
            commutative = commutative && factors.back()->commutative();
            size *= factors.back()->size();
            if (size > kMaxRingSize)
                throw construction_error("product ring: ring size exceeds " + std::to_string(kMaxRingSize));
        }
        std::string name = spec.display_name();
        return Finalizer::make<ProductRing>(std::move(factors), (std::uint32_t)size, commutative,
                                            std::move(name), spec);
    }
    case RingSpec::Kind::Poly:
        throw capability_error("ring " + spec.display_name() +
                               " is not enumerable; this operation needs a finite ring");
    }
    throw construction_error("ring spec: unknown kind");
}

} // namespace pline
