#include "milnorwb/milnor.hpp"

#include <algorithm>
#include <sstream>

namespace mwb {

PureSymbol PureSymbol::of(const FieldDescriptor& f, const std::vector<FieldElement>& slots) {
    for (const auto& a : slots)
        if (a.is_zero()) throw std::invalid_argument("pure symbol: zero slot");
    return {f, slots};
}

std::string PureSymbol::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ",";
        s += slots[i].to_string();
    }
    return s + "}";
}

namespace {

std::vector<SquareClass> class_tuple(const PureSymbol& s) {
    std::vector<SquareClass> out;
    out.reserve(s.slots.size());
    for (const auto& a : s.slots) out.push_back(SquareClass::of(a));
    return out;
}

}  // namespace

MilnorElement MilnorElement::zero(const FieldDescriptor& f, int degree) {
    MilnorElement x;
    x.field_ = f;
    x.degree_ = degree;
    x.class_ = SquareClass::one(f);
    x.recompute_canonical();
    return x;
}

MilnorElement MilnorElement::of_classes(const FieldDescriptor& f,
                                        const std::vector<SquareClass>& slots) {
    MilnorElement x = zero(f, static_cast<int>(slots.size()));
    x.symbols_.push_back(slots);
    x.recompute_canonical();
    return x;
}

MilnorElement MilnorElement::of_symbol(const PureSymbol& s) {
    return of_classes(s.field, class_tuple(s));
}

MilnorElement MilnorElement::sum_of(const FieldDescriptor& f, int degree,
                                    const std::vector<PureSymbol>& symbols) {
    MilnorElement x = zero(f, degree);
    for (const auto& s : symbols) {
        if (s.degree() != degree) throw std::invalid_argument("mixed-degree symbol sum");
        x.symbols_.push_back(class_tuple(s));
    }
    x.recompute_canonical();
    return x;
}

MilnorElement MilnorElement::parse(const FieldDescriptor& f, const std::string& text) {
    std::vector<PureSymbol> symbols;
    size_t pos = 0;
    int degree = -1;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == '+' || isspace(static_cast<unsigned char>(text[pos]))))
            ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '{') throw std::invalid_argument("symbol literal must start with '{'");
        size_t close = text.find('}', pos);
        if (close == std::string::npos) throw std::invalid_argument("unterminated symbol literal");
        std::string body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        std::vector<FieldElement> slots;
        std::string part;
        int depth = 0;
        auto flush = [&] {
            if (part.empty()) throw std::invalid_argument("empty slot in symbol literal");
            slots.push_back(FieldElement::parse(f, part));
            part.clear();
        };
        for (char c : body) {
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c == ',' && depth == 0)
                flush();
            else
                part += c;
        }
        if (!part.empty()) flush();
        symbols.push_back(PureSymbol::of(f, slots));
        if (degree < 0) degree = symbols.back().degree();
        if (symbols.back().degree() != degree)
            throw std::invalid_argument("mixed degrees in symbol sum");
    }
    if (symbols.empty()) throw std::invalid_argument("empty symbol expression");
    return sum_of(f, degree, symbols);
}

void MilnorElement::recompute_canonical() {
    // reduce the symbol list mod 2 first
    std::sort(symbols_.begin(), symbols_.end());
    std::vector<std::vector<SquareClass>> reduced;
    for (size_t i = 0; i < symbols_.size();) {
        size_t j = i;
        while (j < symbols_.size() && symbols_[j] == symbols_[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(symbols_[i]);
        i = j;
    }
    symbols_ = std::move(reduced);

    bit_ = 0;
    class_ = SquareClass::one(field_);
    places_.clear();

    for (const auto& sym : symbols_) {
        switch (field_.kind) {
            case FieldKind::AlgClosed:
                if (degree_ == 0) bit_ ^= 1;
                break;
            case FieldKind::Real: {
                int term = 1;
                for (const auto& c : sym) term &= c.negative() ? 1 : 0;
                bit_ ^= term;
                break;
            }
            case FieldKind::Finite: {
                if (degree_ == 0) {
                    bit_ ^= 1;
                } else if (degree_ == 1) {
                    bit_ ^= sym[0].is_one() ? 0 : 1;
                }
                break;
            }
            case FieldKind::Padic: {
                if (degree_ == 0) {
                    bit_ ^= 1;
                } else if (degree_ == 1) {
                    class_ = class_ * sym[0];
                } else if (degree_ == 2) {
                    int h = hilbert_symbol(Place::prime(field_.p),
                                           Rational(sym[0].canonical_integer()),
                                           Rational(sym[1].canonical_integer()));
                    bit_ ^= h == -1 ? 1 : 0;
                }
                break;
            }
            case FieldKind::Rational: {
                if (degree_ == 0) {
                    bit_ ^= 1;
                } else if (degree_ == 1) {
                    class_ = class_ * sym[0];
                } else if (degree_ == 2) {
                    Rational a(sym[0].canonical_integer());
                    Rational b(sym[1].canonical_integer());
                    for (const auto& v : relevant_places(a, b)) {
                        if (hilbert_symbol(v, a, b) == -1) {
                            auto it = places_.find(v);
                            if (it == places_.end())
                                places_.insert(v);
                            else
                                places_.erase(it);
                        }
                    }
                } else {
                    int term = 1;
                    for (const auto& c : sym) term &= c.negative() ? 1 : 0;
                    bit_ ^= term;
                }
                break;
            }
        }
    }
}

MilnorElement MilnorElement::operator+(const MilnorElement& rhs) const {
    if (!(field_ == rhs.field_) || degree_ != rhs.degree_)
        throw std::invalid_argument("milnor sum: field/degree mismatch");
    MilnorElement out = *this;
    out.symbols_.insert(out.symbols_.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    out.recompute_canonical();
    return out;
}

MilnorElement MilnorElement::product(const MilnorElement& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("milnor product: field mismatch");
    MilnorElement out = zero(field_, degree_ + rhs.degree_);
    for (const auto& s1 : symbols_)
        for (const auto& s2 : rhs.symbols_) {
            auto slots = s1;
            slots.insert(slots.end(), s2.begin(), s2.end());
            out.symbols_.push_back(slots);
        }
    out.recompute_canonical();
    return out;
}

bool MilnorElement::is_zero() const {
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

bool MilnorElement::operator==(const MilnorElement& rhs) const {
    if (!(field_ == rhs.field_) || degree_ != rhs.degree_) return false;
    return (*this + rhs).is_zero();
}

std::string MilnorElement::to_string() const {
    if (symbols_.empty()) return "0";
    std::string s;
    for (const auto& sym : symbols_) {
        if (!s.empty()) s += " + ";
        s += "{";
        for (size_t i = 0; i < sym.size(); ++i) {
            if (i) s += ",";
            s += sym[i].to_string();
        }
        s += "}";
    }
    return s;
}

MilnorElement symbol_normalize(const MilnorElement& x) { return x; }

bool symbol_is_zero(const MilnorElement& x) { return x.is_zero(); }

MilnorElement tame_symbol(std::int64_t p, const PureSymbol& x) {
    return tame_symbol(p, MilnorElement::of_symbol(x));
}

MilnorElement tame_symbol(std::int64_t p, const MilnorElement& x) {
    if (p == 2 || !is_prime_i64(p))
        throw std::invalid_argument("tame_symbol: p must be an odd prime");
    if (x.field().kind != FieldKind::Rational || x.degree() != 2)
        throw std::invalid_argument("tame_symbol: expects a degree-2 element over Q");
    FieldDescriptor fp = FieldDescriptor::finite(p);
    MilnorElement out = MilnorElement::zero(fp, 1);
    for (const auto& sym : x.symbols()) {
        Rational a(sym[0].canonical_integer());
        Rational b(sym[1].canonical_integer());
        int va = padic_valuation(a, p), vb = padic_valuation(b, p);
        // (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} is a p-unit
        Rational t = (va * vb) % 2 ? Rational(-1) : Rational(1);
        Rational ap = padic_unit(a, p), bp = padic_unit(b, p);
        for (int i = 0; i < std::abs(vb); ++i) t = vb > 0 ? t * ap : t / ap;
        for (int i = 0; i < std::abs(va); ++i) t = va > 0 ? t / bp : t * bp;
        std::int64_t r = residue_mod(t, p);
        out = out + MilnorElement::of_symbol(
                        PureSymbol::of(fp, {FieldElement::from_integer(fp, r)}));
    }
    return out;
}

namespace {

std::vector<std::int64_t> primes_up_to(int bound) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime_i64(p)) ps.push_back(p);
    return ps;
}

std::vector<MilnorElement> q_degree2_basis(const Bounds& bounds) {
    FieldDescriptor Q = FieldDescriptor::rationals();
    auto ps = primes_up_to(bounds.prime_bound);
    int target = static_cast<int>(ps.size());
    std::vector<Place> places{Place::real_place()};
    for (auto p : ps) places.push_back(Place::prime(p));

    std::vector<Rational> pool{-1};
    for (auto p : ps) pool.emplace_back(p);

    std::vector<std::vector<int>> echelon;
    std::vector<MilnorElement> basis;
    auto reduce = [&](std::vector<int> v) {
        for (const auto& row : echelon) {
            size_t lead = std::find(row.begin(), row.end(), 1) - row.begin();
            if (v[lead])
                for (size_t i = 0; i < v.size(); ++i) v[i] ^= row[i];
        }
        return v;
    };
    for (size_t i = 0; i < pool.size() && static_cast<int>(basis.size()) < target; ++i) {
        for (size_t j = i; j < pool.size() && static_cast<int>(basis.size()) < target; ++j) {
            MilnorElement sym = MilnorElement::of_classes(
                Q, {SquareClass::of_rational(Q, pool[i]), SquareClass::of_rational(Q, pool[j])});
            std::vector<int> bits(places.size(), 0);
            for (size_t k = 0; k < places.size(); ++k)
                bits[k] = sym.local_support().count(places[k]) ? 1 : 0;
            auto red = reduce(bits);
            if (std::any_of(red.begin(), red.end(), [](int b) { return b; })) {
                echelon.push_back(red);
                std::sort(echelon.begin(), echelon.end(), [](auto& a, auto& b) {
                    return std::find(a.begin(), a.end(), 1) - a.begin() <
                           std::find(b.begin(), b.end(), 1) - b.begin();
                });
                basis.push_back(sym);
            }
        }
    }
    return basis;
}

}  // namespace

std::vector<MilnorElement> k_group_basis(const FieldDescriptor& f, int degree, const Bounds& bounds) {
    if (degree < 0) throw std::invalid_argument("k_group: negative degree");
    std::vector<MilnorElement> out;
    auto empty_symbol = [&] { return MilnorElement::of_classes(f, {}); };
    if (degree == 0) {
        out.push_back(empty_symbol());
        return out;
    }
    switch (f.kind) {
        case FieldKind::AlgClosed:
            break;
        case FieldKind::Real: {
            std::vector<SquareClass> slots(degree, SquareClass::of_rational(f, -1));
            out.push_back(MilnorElement::of_classes(f, slots));
            break;
        }
        case FieldKind::Finite: {
            if (degree == 1) {
                auto g = square_class_group(f)[1];
                out.push_back(MilnorElement::of_classes(f, {g}));
            }
            break;
        }
        case FieldKind::Padic: {
            auto classes = square_class_group(f);
            if (degree == 1) {
                if (f.p != 2) {
                    std::int64_t g = least_nonresidue(f.p);
                    out.push_back(MilnorElement::of_classes(f, {SquareClass::of_rational(f, g)}));
                    out.push_back(MilnorElement::of_classes(f, {SquareClass::of_rational(f, f.p)}));
                } else {
                    for (int u : {-1, 5, 2})
                        out.push_back(MilnorElement::of_classes(f, {SquareClass::of_rational(f, u)}));
                }
            } else if (degree == 2) {
                if (f.p != 2) {
                    std::int64_t g = least_nonresidue(f.p);
                    out.push_back(MilnorElement::of_classes(
                        f, {SquareClass::of_rational(f, g), SquareClass::of_rational(f, f.p)}));
                } else {
                    out.push_back(MilnorElement::of_classes(
                        f, {SquareClass::of_rational(f, -1), SquareClass::of_rational(f, -1)}));
                }
            }
            break;
        }
        case FieldKind::Rational: {
            if (degree == 1) {
                out.push_back(MilnorElement::of_classes(f, {SquareClass::of_rational(f, -1)}));
                for (auto p : primes_up_to(bounds.prime_bound))
                    out.push_back(MilnorElement::of_classes(f, {SquareClass::of_rational(f, p)}));
            } else if (degree == 2) {
                out = q_degree2_basis(bounds);
            } else {
                std::vector<SquareClass> slots(degree, SquareClass::of_rational(f, -1));
                out.push_back(MilnorElement::of_classes(f, slots));
            }
            break;
        }
    }
    return out;
}

KGroupStructure k_group(const FieldDescriptor& f, int degree, const Bounds& bounds) {
    auto basis = k_group_basis(f, degree, bounds);
    KGroupStructure s;
    s.field = f;
    s.degree = degree;
    s.dimension = static_cast<int>(basis.size());
    if (f.kind == FieldKind::Rational) s.prime_bound = bounds.prime_bound;
    for (const auto& b : basis) s.generators.push_back(b.to_string());
    return s;
}

}  // namespace mwb
