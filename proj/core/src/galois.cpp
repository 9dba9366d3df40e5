#include "milnorwb/galois.hpp"

#include <algorithm>

namespace mwb {

CohomologyClass CohomologyClass::zero(const FieldDescriptor& f, int degree) {
    if (degree < 0) throw std::invalid_argument("cohomology degree must be nonnegative");
    CohomologyClass c;
    c.field_ = f;
    c.degree_ = degree;
    c.class_ = SquareClass::one(f);
    return c;
}

CohomologyClass CohomologyClass::scalar(const FieldDescriptor& f) {
    CohomologyClass c = zero(f, 0);
    c.bit_ = 1;
    return c;
}

bool CohomologyClass::is_zero() const {
    switch (field_.kind) {
        case FieldKind::AlgClosed:
            return degree_ >= 1 || bit_ == 0;
        case FieldKind::Real:
            return bit_ == 0;
        case FieldKind::Finite:
            return degree_ >= 2 || bit_ == 0;
        case FieldKind::Padic:
            if (degree_ >= 3) return true;
            if (degree_ == 1) return class_.is_one();
            return bit_ == 0;
        case FieldKind::Rational:
            if (degree_ == 1) return class_.is_one();
            if (degree_ == 2) return places_.empty();
            return bit_ == 0;
    }
    return true;
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& rhs) const {
    if (!(field_ == rhs.field_) || degree_ != rhs.degree_)
        throw std::invalid_argument("cohomology sum: field/degree mismatch");
    CohomologyClass out = *this;
    out.bit_ ^= rhs.bit_;
    out.class_ = out.class_ * rhs.class_;
    for (const auto& v : rhs.places_) {
        auto it = out.places_.find(v);
        if (it == out.places_.end())
            out.places_.insert(v);
        else
            out.places_.erase(it);
    }
    return out;
}

bool CohomologyClass::operator==(const CohomologyClass& rhs) const {
    if (!(field_ == rhs.field_) || degree_ != rhs.degree_) return false;
    return (*this + rhs).is_zero();
}

std::string CohomologyClass::to_string() const {
    if (is_zero()) return "0";
    switch (field_.kind) {
        case FieldKind::Real:
            return degree_ == 0 ? "1" : "a^" + std::to_string(degree_);
        case FieldKind::Finite:
            return degree_ == 0 ? "1" : "(g)";
        case FieldKind::Padic:
            if (degree_ == 1) return "(" + class_.to_string() + ")";
            return degree_ == 0 ? "1" : "h";
        case FieldKind::Rational: {
            if (degree_ == 1) return "(" + class_.to_string() + ")";
            if (degree_ == 2) {
                std::string s = "loc[";
                bool first = true;
                for (const auto& v : places_) {
                    if (!first) s += ",";
                    s += v.to_string();
                    first = false;
                }
                return s + "]";
            }
            return degree_ == 0 ? "1" : "r^" + std::to_string(degree_);
        }
        case FieldKind::AlgClosed:
            return "1";
    }
    return "?";
}

CohomologyClass class_of_unit(const FieldDescriptor& f, const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("class_of_unit: zero element");
    CohomologyClass c = CohomologyClass::zero(f, 1);
    SquareClass cls = SquareClass::of(a);
    switch (f.kind) {
        case FieldKind::AlgClosed:
            break;
        case FieldKind::Real:
            c.bit_ = cls.negative() ? 1 : 0;
            break;
        case FieldKind::Finite:
            c.bit_ = cls.is_one() ? 0 : 1;
            break;
        case FieldKind::Padic:
        case FieldKind::Rational:
            c.class_ = cls;
            break;
    }
    return c;
}

CohomologyClass cohomology_from_parts(const FieldDescriptor& f, int degree, int bit,
                                      const SquareClass& cls, const std::set<Place>& places) {
    CohomologyClass c = CohomologyClass::zero(f, degree);
    c.bit_ = bit;
    c.class_ = cls;
    c.places_ = places;
    return c;
}

namespace {

// real-place component of a class over Q, any degree
int real_bit(const CohomologyClass& x) {
    switch (x.degree()) {
        case 0:
            return x.bit();
        case 1:
            return x.unit_class().negative() ? 1 : 0;
        case 2:
            return x.local_support().count(Place::real_place()) ? 1 : 0;
        default:
            return x.bit();
    }
}

}  // namespace

CohomologyClass cup_product(const CohomologyClass& x, const CohomologyClass& y) {
    if (!(x.field() == y.field())) throw std::invalid_argument("cup_product: field mismatch");
    const auto& f = x.field();
    int m = x.degree(), n = y.degree();
    CohomologyClass out = CohomologyClass::zero(f, m + n);
    if (x.is_zero() || y.is_zero()) return out;
    if (m == 0) return y;  // x is the unit scalar
    if (n == 0) return x;

    switch (f.kind) {
        case FieldKind::AlgClosed:
            break;  // positive degrees vanish
        case FieldKind::Real:
        case FieldKind::Finite:
            out.bit_ = x.bit() & y.bit();  // a^m * a^n; over F_q the target H^2 = 0 kills it
            break;
        case FieldKind::Padic: {
            if (m == 1 && n == 1) {
                int h = hilbert_symbol(Place::prime(f.p), Rational(x.unit_class().canonical_integer()),
                                       Rational(y.unit_class().canonical_integer()));
                out.bit_ = h == -1 ? 1 : 0;
            }
            // all higher targets vanish
            break;
        }
        case FieldKind::Rational: {
            if (m == 1 && n == 1) {
                Rational a(x.unit_class().canonical_integer());
                Rational b(y.unit_class().canonical_integer());
                for (const auto& v : relevant_places(a, b))
                    if (hilbert_symbol(v, a, b) == -1) out.places_.insert(v);
            } else {
                // degree >= 3 targets see only the real place
                out.bit_ = real_bit(x) & real_bit(y);
            }
            break;
        }
    }
    if (out.field().kind == FieldKind::Finite && out.degree() >= 2) out.bit_ = 0;
    return out;
}

namespace {

std::vector<std::int64_t> primes_up_to(int bound) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime_i64(p)) ps.push_back(p);
    return ps;
}

}  // namespace

CohomologyStructure cohomology_structure(const FieldDescriptor& f, int degree, const Bounds& bounds) {
    if (degree < 0) throw std::invalid_argument("cohomology degree must be nonnegative");
    CohomologyStructure s;
    s.field = f;
    s.degree = degree;
    switch (f.kind) {
        case FieldKind::AlgClosed:
            if (degree == 0) {
                s.dimension = 1;
                s.basis = {"1"};
            }
            break;
        case FieldKind::Real:
            s.dimension = 1;
            s.basis = {degree == 0 ? "1" : "a^" + std::to_string(degree)};
            break;
        case FieldKind::Finite:
            if (degree <= 1) {
                s.dimension = 1;
                s.basis = {degree == 0 ? "1" : "(g)"};
            }
            break;
        case FieldKind::Padic:
            if (degree == 0) {
                s.dimension = 1;
                s.basis = {"1"};
            } else if (degree == 1) {
                if (f.p != 2) {
                    s.dimension = 2;
                    s.basis = {"(g)", "(p)"};
                } else {
                    s.dimension = 3;
                    s.basis = {"(-1)", "(5)", "(2)"};
                }
            } else if (degree == 2) {
                s.dimension = 1;
                s.basis = {"h"};
            }
            break;
        case FieldKind::Rational: {
            s.prime_bound = bounds.prime_bound;
            auto ps = primes_up_to(bounds.prime_bound);
            if (degree == 0) {
                s.dimension = 1;
                s.basis = {"1"};
            } else if (degree == 1) {
                s.dimension = 1 + static_cast<int>(ps.size());
                s.basis.push_back("(-1)");
                for (auto p : ps) s.basis.push_back("(" + std::to_string(p) + ")");
            } else if (degree == 2) {
                s.dimension = static_cast<int>(ps.size());
                for (auto p : ps) s.basis.push_back("e(inf)+e(" + std::to_string(p) + ")");
            } else {
                s.dimension = 1;
                s.basis = {"r^" + std::to_string(degree)};
            }
            break;
        }
    }
    return s;
}

}  // namespace mwb
