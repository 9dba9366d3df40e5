#include "milnorwb/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace mwb {

FieldDescriptor FieldDescriptor::alg_closed() { return {FieldKind::AlgClosed, 0, 0, 1}; }
FieldDescriptor FieldDescriptor::real() { return {FieldKind::Real, 0, 0, 1}; }
FieldDescriptor FieldDescriptor::rationals() { return {FieldKind::Rational, 0, 0, 1}; }

FieldDescriptor FieldDescriptor::finite(std::int64_t q) {
    std::int64_t p;
    int e;
    if (!prime_power_decompose(q, p, e))
        throw std::invalid_argument("finite field size must be a prime power, got " + std::to_string(q));
    if (p == 2) throw std::invalid_argument("characteristic 2 is unsupported (char != 2 throughout)");
    return {FieldKind::Finite, q, p, e};
}

FieldDescriptor FieldDescriptor::padic(std::int64_t p) {
    if (!is_prime_i64(p)) throw std::invalid_argument("Qp requires a prime, got " + std::to_string(p));
    return {FieldKind::Padic, 0, p, 1};
}

std::string FieldDescriptor::to_string() const {
    switch (kind) {
        case FieldKind::AlgClosed: return "C";
        case FieldKind::Real: return "R";
        case FieldKind::Rational: return "Q";
        case FieldKind::Finite: return "Fq:" + std::to_string(q);
        case FieldKind::Padic: return "Qp:" + std::to_string(p);
    }
    return "?";
}

FieldDescriptor parse_field(const std::string& spec) {
    if (spec == "C") return FieldDescriptor::alg_closed();
    if (spec == "R") return FieldDescriptor::real();
    if (spec == "Q") return FieldDescriptor::rationals();
    auto starts = [&](const char* pre) { return spec.rfind(pre, 0) == 0; };
    try {
        if (starts("Fq:")) return FieldDescriptor::finite(std::stoll(spec.substr(3)));
        if (starts("Qp:")) return FieldDescriptor::padic(std::stoll(spec.substr(3)));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed field spec: " + spec);
    }
    throw std::invalid_argument("malformed field spec: " + spec);
}

// ---------------------------------------------------------------------------
// Finite field arithmetic GF(p^e)
//
// Fixed conventions: the modulus is the lexicographically least monic
// irreducible polynomial (coefficients compared low-degree-first as base-p
// digits), and g is the least primitive element in the same enumeration
// order.  Both are deterministic functions of q.

namespace {

struct GFTable {
    std::int64_t p;
    int e;
    std::vector<std::int64_t> modulus;  // monic degree-e, coeffs c0..c_{e-1} of the non-leading part
    std::vector<std::int64_t> generator;
};

using Poly = std::vector<std::int64_t>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const GFTable& t) {
    std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % t.p;
    // reduce by x^e = -modulus tail
    for (int d = static_cast<int>(prod.size()) - 1; d >= t.e; --d) {
        std::int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int k = 0; k < t.e; ++k)
            prod[d - t.e + k] = ((prod[d - t.e + k] - c * t.modulus[k]) % t.p + t.p) % t.p;
    }
    prod.resize(t.e);
    return prod;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

Poly poly_pow(Poly a, std::int64_t n, const GFTable& t) {
    Poly acc(t.e, 0);
    acc[0] = 1;
    while (n > 0) {
        if (n & 1) acc = poly_mul_mod(acc, a, t);
        a = poly_mul_mod(a, a, t);
        n >>= 1;
    }
    return acc;
}

Poly index_to_poly(std::int64_t idx, std::int64_t p, int e) {
    Poly c(e, 0);
    for (int i = 0; i < e; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

bool is_irreducible(const Poly& tail, std::int64_t p, int e) {
    // f irreducible over F_p iff x^{p^e} = x mod f and gcd-style condition
    // x^{p^{e/r}} != x for prime r | e.  Degrees here are at most 3, so a
    // root search plus the standard power test is plenty.
    GFTable t{p, e, tail, {}};
    Poly x(e, 0);
    if (e == 1) return true;
    x[1] = 1;
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    Poly xq = poly_pow(x, pe, t);
    if (xq != x) return false;
    for (std::int64_t r = 2; r <= e; ++r) {
        if (e % r != 0 || !is_prime_i64(r)) continue;
        std::int64_t pd = 1;
        for (int i = 0; i < e / r; ++i) pd *= p;
        if (poly_pow(x, pd, t) == x) return false;
    }
    return true;
}

const GFTable& gf_table(std::int64_t p, int e) {
    static std::map<std::pair<std::int64_t, int>, GFTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    GFTable t{p, e, {}, {}};
    if (e == 1) {
        t.modulus = {0};
    } else {
        std::int64_t pe1 = 1;
        for (int i = 0; i < e; ++i) pe1 *= p;
        for (std::int64_t idx = 0; idx < pe1; ++idx) {
            Poly tail = index_to_poly(idx, p, e);
            if (is_irreducible(tail, p, e)) {
                t.modulus = tail;
                break;
            }
        }
    }
    // least primitive element
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    auto order_factors = factor(BigInt(q - 1));
    for (std::int64_t idx = 1; idx < q; ++idx) {
        Poly cand = index_to_poly(idx, p, e);
        bool primitive = true;
        for (const auto& [r, mult] : order_factors) {
            (void)mult;
            Poly pw = poly_pow(cand, (q - 1) / to_int64(r), t);
            Poly one(e, 0);
            one[0] = 1;
            if (pw == one) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            t.generator = cand;
            break;
        }
    }
    return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

std::int64_t least_primitive_root(std::int64_t p) {
    const auto& t = gf_table(p, 1);
    return t.generator[0];
}

std::int64_t least_nonresidue(std::int64_t p) {
    for (std::int64_t g = 2; g < p; ++g) {
        if (legendre_symbol(BigInt(g), p) == -1) return g;
    }
    throw std::logic_error("no quadratic nonresidue found mod " + std::to_string(p));
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldDescriptor f, Rational value) : field_(f), rat_(std::move(value)) {
    if (f.kind == FieldKind::Finite) {
        std::int64_t n = to_int64(num(rat_)), d = to_int64(den(rat_));
        if (d % f.p == 0) throw std::invalid_argument("denominator divisible by the characteristic");
        coords_.assign(f.ext_degree, 0);
        std::int64_t di = 1;
        std::int64_t dm = ((d % f.p) + f.p) % f.p;
        for (std::int64_t k = 1; k < f.p; ++k)
            if (dm * k % f.p == 1) di = k;
        coords_[0] = ((n % f.p) * di % f.p + f.p) % f.p;
        rat_ = 0;
    }
}

FieldElement::FieldElement(FieldDescriptor f, std::vector<std::int64_t> coords)
    : field_(f), coords_(std::move(coords)) {
    if (f.kind != FieldKind::Finite) throw std::invalid_argument("coordinate constructor is for finite fields");
    coords_.resize(f.ext_degree, 0);
    for (auto& c : coords_) c = ((c % f.p) + f.p) % f.p;
}

FieldElement FieldElement::one(const FieldDescriptor& f) { return from_integer(f, 1); }

FieldElement FieldElement::from_integer(const FieldDescriptor& f, std::int64_t n) {
    return FieldElement(f, Rational(n));
}

FieldElement FieldElement::parse(const FieldDescriptor& f, const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty element literal");
    if (s.front() == '[') {
        if (f.kind != FieldKind::Finite)
            throw std::invalid_argument("coordinate literals are only valid over finite fields");
        if (s.back() != ']') throw std::invalid_argument("unterminated coordinate literal: " + text);
        std::vector<std::int64_t> cs;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) cs.push_back(std::stoll(part));
        return FieldElement(f, cs);
    }
    return FieldElement(f, parse_rational(s));
}

bool FieldElement::is_zero() const {
    if (field_.kind == FieldKind::Finite) return poly_is_zero(coords_);
    return rat_ == 0;
}

bool FieldElement::is_one() const {
    if (field_.kind == FieldKind::Finite) {
        if (coords_.empty() || coords_[0] != 1) return false;
        return std::all_of(coords_.begin() + 1, coords_.end(), [](std::int64_t c) { return c == 0; });
    }
    return rat_ == 1;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("field mismatch");
    if (field_.kind == FieldKind::Finite) {
        FieldElement out;
        out.field_ = field_;
        out.coords_ = poly_mul_mod(coords_, rhs.coords_, gf_table(field_.p, field_.ext_degree));
        return out;
    }
    return FieldElement(field_, rat_ * rhs.rat_);
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("field mismatch");
    if (field_.kind == FieldKind::Finite) {
        FieldElement out;
        out.field_ = field_;
        out.coords_ = coords_;
        for (size_t i = 0; i < out.coords_.size(); ++i)
            out.coords_[i] = (out.coords_[i] + rhs.coords_[i]) % field_.p;
        return out;
    }
    return FieldElement(field_, rat_ + rhs.rat_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + rhs.negate(); }

FieldElement FieldElement::negate() const {
    if (field_.kind == FieldKind::Finite) {
        FieldElement out;
        out.field_ = field_;
        out.coords_ = coords_;
        for (auto& c : out.coords_) c = (field_.p - c) % field_.p;
        return out;
    }
    return FieldElement(field_, -rat_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    if (field_.kind == FieldKind::Finite) {
        FieldElement out;
        out.field_ = field_;
        out.coords_ = poly_pow(coords_, field_.q - 2, gf_table(field_.p, field_.ext_degree));
        return out;
    }
    return FieldElement(field_, Rational(1) / rat_);
}

FieldElement FieldElement::one_minus() const { return one(field_) - *this; }

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) return false;
    if (field_.kind == FieldKind::Finite) return coords_ == rhs.coords_;
    return rat_ == rhs.rat_;
}

const Rational& FieldElement::rational() const {
    if (field_.kind == FieldKind::Finite) throw std::logic_error("finite-field element has no rational value");
    return rat_;
}

const std::vector<std::int64_t>& FieldElement::coords() const {
    if (field_.kind != FieldKind::Finite) throw std::logic_error("coords are only defined over finite fields");
    return coords_;
}

std::string FieldElement::to_string() const {
    if (field_.kind == FieldKind::Finite) {
        if (field_.ext_degree == 1) return std::to_string(coords_[0]);
        std::string s = "[";
        for (int i = 0; i < field_.ext_degree; ++i) {
            if (i) s += ",";
            s += std::to_string(coords_[i]);
        }
        return s + "]";
    }
    std::ostringstream os;
    os << rat_;
    return os.str();
}

// ---------------------------------------------------------------------------
// SquareClass

namespace {

bool finite_is_square(const FieldElement& a) {
    const auto& f = a.field();
    const auto& t = gf_table(f.p, f.ext_degree);
    Poly pw = poly_pow(a.coords(), (f.q - 1) / 2, t);
    Poly one(f.ext_degree, 0);
    one[0] = 1;
    return pw == one;
}

int unit_mod8(const Rational& u) {
    // num * den is congruent to num/den mod 8 for odd den (den^2 = 1 mod 8)
    BigInt m = num(u) % 8 * (den(u) % 8) % 8;
    std::int64_t r = to_int64(m % 8);
    return static_cast<int>(((r % 8) + 8) % 8);
}

}  // namespace

SquareClass SquareClass::one(const FieldDescriptor& f) {
    SquareClass c;
    c.field_ = f;
    return c;
}

SquareClass SquareClass::of(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("square class of zero");
    const auto& f = a.field();
    if (f.kind == FieldKind::Finite) {
        SquareClass c;
        c.field_ = f;
        c.nonsquare_ = !finite_is_square(a);
        return c;
    }
    return of_rational(f, a.rational());
}

SquareClass SquareClass::of_rational(const FieldDescriptor& f, const Rational& a) {
    if (a == 0) throw std::invalid_argument("square class of zero");
    SquareClass c;
    c.field_ = f;
    switch (f.kind) {
        case FieldKind::AlgClosed:
            break;
        case FieldKind::Real:
            c.sign_ = a < 0;
            break;
        case FieldKind::Rational:
            c.sign_ = a < 0;
            c.primes_ = odd_multiplicity_primes(num(a) * den(a));
            break;
        case FieldKind::Padic: {
            int v = padic_valuation(a, f.p);
            c.val_odd_ = (v % 2 + 2) % 2 == 1;
            Rational u = padic_unit(a, f.p);
            if (f.p == 2) {
                c.unit_mod8_ = unit_mod8(u);
            } else {
                std::int64_t r = residue_mod(u, f.p);
                c.nonsquare_ = legendre_symbol(BigInt(r), f.p) == -1;
            }
            break;
        }
        case FieldKind::Finite:
            throw std::logic_error("use SquareClass::of for finite fields");
    }
    return c;
}

SquareClass SquareClass::operator*(const SquareClass& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("field mismatch");
    SquareClass c;
    c.field_ = field_;
    switch (field_.kind) {
        case FieldKind::AlgClosed:
            break;
        case FieldKind::Real:
            c.sign_ = sign_ != rhs.sign_;
            break;
        case FieldKind::Finite:
            c.nonsquare_ = nonsquare_ != rhs.nonsquare_;
            break;
        case FieldKind::Padic:
            c.val_odd_ = val_odd_ != rhs.val_odd_;
            if (field_.p == 2)
                c.unit_mod8_ = unit_mod8_ * rhs.unit_mod8_ % 8;
            else
                c.nonsquare_ = nonsquare_ != rhs.nonsquare_;
            break;
        case FieldKind::Rational: {
            c.sign_ = sign_ != rhs.sign_;
            // symmetric difference of prime supports
            std::set_symmetric_difference(primes_.begin(), primes_.end(), rhs.primes_.begin(),
                                          rhs.primes_.end(), std::back_inserter(c.primes_));
            break;
        }
    }
    return c;
}

bool SquareClass::is_one() const { return *this == one(field_); }

FieldElement SquareClass::representative() const {
    if (field_.kind == FieldKind::Finite) {
        if (!nonsquare_) return FieldElement::one(field_);
        return FieldElement(field_, gf_table(field_.p, field_.ext_degree).generator);
    }
    return FieldElement(field_, Rational(canonical_integer()));
}

BigInt SquareClass::canonical_integer() const {
    switch (field_.kind) {
        case FieldKind::AlgClosed:
            return 1;
        case FieldKind::Real:
            return sign_ ? -1 : 1;
        case FieldKind::Padic: {
            if (field_.p == 2) {
                static const std::map<int, int> rep{{1, 1}, {7, -1}, {5, 5}, {3, -5}};
                BigInt u = rep.at(unit_mod8_);
                return val_odd_ ? u * 2 : u;
            }
            BigInt u = nonsquare_ ? least_nonresidue(field_.p) : 1;
            return val_odd_ ? u * field_.p : u;
        }
        case FieldKind::Rational: {
            BigInt n = sign_ ? -1 : 1;
            for (auto p : primes_) n *= p;
            return n;
        }
        case FieldKind::Finite:
            throw std::logic_error("finite-field classes have no canonical integer");
    }
    return 1;
}

bool SquareClass::negative() const {
    if (field_.kind != FieldKind::Real && field_.kind != FieldKind::Rational)
        throw std::logic_error("sign is only defined over R and Q");
    return sign_;
}

std::string SquareClass::to_string() const {
    if (field_.kind == FieldKind::Finite) return nonsquare_ ? "g" : "1";
    if (field_.kind == FieldKind::Padic && field_.p != 2) {
        std::string u = nonsquare_ ? "g" : "";
        std::string v = val_odd_ ? "p" : "";
        std::string s = u + v;
        return s.empty() ? "1" : s;
    }
    return canonical_integer().str();
}

std::vector<SquareClass> square_class_group(const FieldDescriptor& f) {
    std::vector<SquareClass> out;
    switch (f.kind) {
        case FieldKind::AlgClosed:
            out.push_back(SquareClass::one(f));
            break;
        case FieldKind::Real:
            out.push_back(SquareClass::of_rational(f, 1));
            out.push_back(SquareClass::of_rational(f, -1));
            break;
        case FieldKind::Finite: {
            out.push_back(SquareClass::one(f));
            const auto& t = gf_table(f.p, f.ext_degree);
            out.push_back(SquareClass::of(FieldElement(f, t.generator)));
            break;
        }
        case FieldKind::Padic: {
            if (f.p == 2) {
                for (int u : {1, -1, 5, -5}) {
                    out.push_back(SquareClass::of_rational(f, u));
                    out.push_back(SquareClass::of_rational(f, 2 * u));
                }
                std::sort(out.begin(), out.end());
            } else {
                std::int64_t g = least_nonresidue(f.p);
                out.push_back(SquareClass::of_rational(f, 1));
                out.push_back(SquareClass::of_rational(f, g));
                out.push_back(SquareClass::of_rational(f, f.p));
                out.push_back(SquareClass::of_rational(f, Rational(g) * f.p));
            }
            break;
        }
        case FieldKind::Rational:
            throw std::invalid_argument("Q has infinitely many square classes");
    }
    return out;
}

int legendre_symbol(const BigInt& a, std::int64_t p) {
    if (p == 2 || !is_prime_i64(p)) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    std::int64_t t = mod_pow(to_int64(r), (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Hilbert symbol

std::string Place::to_string() const { return real ? "inf" : std::to_string(p); }

namespace {

// (-1)^k parity helpers for the p = 2 formula
int eps_mod2(std::int64_t u) { return static_cast<int>((((u - 1) / 2) % 2 + 2) % 2); }
int omega_mod2(std::int64_t u) { return static_cast<int>((((u * u - 1) / 8) % 2 + 2) % 2); }

}  // namespace

int hilbert_symbol(const Place& v, const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.real) return (a < 0 && b < 0) ? -1 : 1;
    std::int64_t p = v.p;
    int alpha = padic_valuation(a, p);
    int beta = padic_valuation(b, p);
    Rational u = padic_unit(a, p);
    Rational w = padic_unit(b, p);
    if (p != 2) {
        int e = ((p - 1) / 2) % 2;
        int exponent = (alpha % 2) * (beta % 2) * e;
        int s = exponent % 2 ? -1 : 1;
        std::int64_t ur = residue_mod(u, p);
        std::int64_t wr = residue_mod(w, p);
        if (beta % 2) s *= legendre_symbol(BigInt(ur), p);
        if (alpha % 2) s *= legendre_symbol(BigInt(wr), p);
        return s;
    }
    std::int64_t ur = residue_mod(u, 8);
    std::int64_t wr = residue_mod(w, 8);
    int exponent = eps_mod2(ur) * eps_mod2(wr) + alpha * omega_mod2(wr) + beta * omega_mod2(ur);
    return exponent % 2 ? -1 : 1;
}

int hilbert_symbol(const FieldDescriptor& place, const FieldElement& a, const FieldElement& b) {
    if (place.kind == FieldKind::Real) return hilbert_symbol(Place::real_place(), a.rational(), b.rational());
    if (place.kind == FieldKind::Padic) return hilbert_symbol(Place::prime(place.p), a.rational(), b.rational());
    throw std::invalid_argument("hilbert_symbol: place must be R or Qp");
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
    std::vector<Place> out{Place::real_place(), Place::prime(2)};
    std::vector<std::int64_t> ps;
    for (const Rational* r : {&a, &b}) {
        for (const auto& [p, e] : factor(num(*r) * den(*r))) {
            (void)e;
            std::int64_t pi = to_int64(p);
            if (pi != 2) ps.push_back(pi);
        }
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (auto p : ps) out.push_back(Place::prime(p));
    return out;
}

}  // namespace mwb
