#include "milnorwb/quadform.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <sstream>

namespace mwb {

// ---------------------------------------------------------------------------
// DiagonalForm

DiagonalForm DiagonalForm::of_elements(const FieldDescriptor& f, const std::vector<FieldElement>& diag) {
    DiagonalForm out{f, {}};
    out.entries.reserve(diag.size());
    for (const auto& a : diag) {
        if (a.is_zero()) throw std::invalid_argument("degenerate form: zero diagonal entry");
        out.entries.push_back(SquareClass::of(a));
    }
    return out;
}

DiagonalForm DiagonalForm::of_classes(const FieldDescriptor& f, std::vector<SquareClass> cs) {
    return DiagonalForm{f, std::move(cs)};
}

DiagonalForm DiagonalForm::parse(const FieldDescriptor& f, const std::string& text) {
    std::vector<FieldElement> diag;
    std::string part;
    int bracket_depth = 0;
    auto flush = [&] {
        if (part.empty()) throw std::invalid_argument("empty form entry");
        diag.push_back(FieldElement::parse(f, part));
        part.clear();
    };
    for (char c : text) {
        if (c == '[') ++bracket_depth;
        if (c == ']') --bracket_depth;
        if (c == ',' && bracket_depth == 0) {
            flush();
        } else {
            part += c;
        }
    }
    flush();
    return of_elements(f, diag);
}

DiagonalForm DiagonalForm::concat(const DiagonalForm& rhs) const {
    if (!(field == rhs.field)) throw std::invalid_argument("field mismatch");
    DiagonalForm out = *this;
    out.entries.insert(out.entries.end(), rhs.entries.begin(), rhs.entries.end());
    return out;
}

std::string DiagonalForm::to_string() const {
    std::string s = "<";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += entries[i].to_string();
    }
    return s + ">";
}

// ---------------------------------------------------------------------------
// GWElement

void GWElement::add_term(const SquareClass& c, std::int64_t m) {
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        if (m != 0) terms_.emplace(c, m);
        return;
    }
    it->second += m;
    if (it->second == 0) terms_.erase(it);
}

GWElement GWElement::of_form(const DiagonalForm& f) {
    GWElement out(f.field);
    for (const auto& c : f.entries) out.add_term(c, 1);
    return out;
}

GWElement GWElement::of_class(const SquareClass& c, std::int64_t mult) {
    GWElement out(c.field());
    out.add_term(c, mult);
    return out;
}

std::int64_t GWElement::rank() const {
    std::int64_t r = 0;
    for (const auto& [c, m] : terms_) r += m;
    return r;
}

GWElement GWElement::operator+(const GWElement& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("field mismatch");
    GWElement out = *this;
    for (const auto& [c, m] : rhs.terms_) out.add_term(c, m);
    return out;
}

GWElement GWElement::operator-() const {
    GWElement out(field_);
    for (const auto& [c, m] : terms_) out.add_term(c, -m);
    return out;
}

GWElement GWElement::operator-(const GWElement& rhs) const { return *this + (-rhs); }

GWElement GWElement::operator*(const GWElement& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("field mismatch");
    GWElement out(field_);
    for (const auto& [c1, m1] : terms_)
        for (const auto& [c2, m2] : rhs.terms_) out.add_term(c1 * c2, m1 * m2);
    return out;
}

GWElement GWElement::scale(std::int64_t n) const {
    GWElement out(field_);
    for (const auto& [c, m] : terms_) out.add_term(c, m * n);
    return out;
}

DiagonalForm GWElement::positive_part() const {
    DiagonalForm out{field_, {}};
    for (const auto& [c, m] : terms_)
        for (std::int64_t i = 0; i < m; ++i) out.entries.push_back(c);
    return out;
}

DiagonalForm GWElement::negative_part() const {
    DiagonalForm out{field_, {}};
    for (const auto& [c, m] : terms_)
        for (std::int64_t i = 0; i < -m; ++i) out.entries.push_back(c);
    return out;
}

std::string GWElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [c, m] : terms_) {
        if (!s.empty()) s += " ";
        s += (m < 0 ? "-" : s.empty() ? "" : "+");
        if (s.back() == '-' || s.back() == '+') s += " ";
        std::int64_t am = m < 0 ? -m : m;
        if (am != 1) s += std::to_string(am) + "*";
        s += "<" + c.to_string() + ">";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

SquareClass det_class(const DiagonalForm& f) {
    SquareClass d = SquareClass::one(f.field);
    for (const auto& c : f.entries) d = d * c;
    return d;
}

SquareClass minus_one_class(const FieldDescriptor& f) {
    if (f.kind == FieldKind::Finite)
        return SquareClass::of(FieldElement::from_integer(f, -1));
    return SquareClass::of_rational(f, -1);
}

std::int64_t signature_of(const DiagonalForm& f) {
    std::int64_t s = 0;
    for (const auto& c : f.entries) s += c.negative() ? -1 : 1;
    return s;
}

std::vector<Place> form_places(const DiagonalForm& f) {
    // Real place, 2, and odd primes dividing some entry: the Hasse symbol
    // is +1 everywhere else.
    std::vector<Place> out;
    if (f.field.kind == FieldKind::Real) return {Place::real_place()};
    if (f.field.kind == FieldKind::Padic) return {Place::prime(f.field.p)};
    if (f.field.kind != FieldKind::Rational) return out;
    out.push_back(Place::real_place());
    out.push_back(Place::prime(2));
    std::set<std::int64_t> ps;
    for (const auto& c : f.entries)
        for (auto p : c.primes())
            if (p != 2) ps.insert(p);
    for (auto p : ps) out.push_back(Place::prime(p));
    return out;
}

int hilbert_of_classes(const SquareClass& a, const SquareClass& b, const Place& v) {
    return hilbert_symbol(v, Rational(a.canonical_integer()), Rational(b.canonical_integer()));
}

}  // namespace

int hasse_invariant(const DiagonalForm& f, const Place& v) {
    int s = 1;
    for (size_t i = 0; i < f.entries.size(); ++i)
        for (size_t j = i + 1; j < f.entries.size(); ++j)
            s *= hilbert_of_classes(f.entries[i], f.entries[j], v);
    return s;
}

int witt_invariant(const DiagonalForm& f, const Place& v) {
    // Dimension-dependent twist relating the Hasse invariant s(q) to the
    // Clifford (Witt) invariant c(q); d below is the signed discriminant.
    int s = hasse_invariant(f, v);
    int n = f.rank();
    SquareClass d = det_class(f);
    int twist = ((n * (n - 1)) / 2) % 2;
    SquareClass disc = twist ? minus_one_class(f.field) * d : d;
    Rational dv(disc.canonical_integer());
    switch (((n % 8) + 8) % 8) {
        case 1:
        case 2: return s;
        case 3:
        case 4: return s * hilbert_symbol(v, Rational(-1), -dv);
        case 5:
        case 6: return s * hilbert_symbol(v, Rational(-1), Rational(-1));
        default: return s * hilbert_symbol(v, Rational(-1), dv);  // 7, 0 mod 8
    }
}

InvariantRecord classical_invariants(const DiagonalForm& f) {
    InvariantRecord rec;
    rec.rank = f.rank();
    rec.e0 = rec.rank % 2;
    int twist = ((rec.rank * (rec.rank - 1)) / 2) % 2;
    SquareClass d = det_class(f);
    rec.disc = twist ? minus_one_class(f.field) * d : d;
    if (f.field.kind == FieldKind::Real || f.field.kind == FieldKind::Rational)
        rec.signature = signature_of(f);
    for (const auto& v : form_places(f)) {
        rec.hasse[v] = hasse_invariant(f, v);
        rec.witt[v] = witt_invariant(f, v);
    }
    return rec;
}

// ---------------------------------------------------------------------------
// gw_equal

namespace {

// isomorphism test for honest forms of equal rank
bool forms_isomorphic(const DiagonalForm& a, const DiagonalForm& b) {
    if (a.rank() != b.rank()) return false;
    switch (a.field.kind) {
        case FieldKind::AlgClosed:
            return true;
        case FieldKind::Real:
            return signature_of(a) == signature_of(b);
        case FieldKind::Finite:
            return det_class(a) == det_class(b);
        case FieldKind::Padic:
            return det_class(a) == det_class(b) &&
                   hasse_invariant(a, Place::prime(a.field.p)) ==
                       hasse_invariant(b, Place::prime(a.field.p));
        case FieldKind::Rational: {
            if (signature_of(a) != signature_of(b)) return false;
            if (!(det_class(a) == det_class(b))) return false;
            auto places = form_places(a);
            for (const auto& v : form_places(b)) {
                if (std::find(places.begin(), places.end(), v) == places.end()) places.push_back(v);
            }
            for (const auto& v : places) {
                if (v.real) continue;  // determined by rank and signature
                if (hasse_invariant(a, v) != hasse_invariant(b, v)) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

bool gw_equal(const GWElement& x, const GWElement& y) {
    if (!(x.field() == y.field())) throw std::invalid_argument("field mismatch");
    GWElement z = x - y;
    DiagonalForm pos = z.positive_part();
    DiagonalForm neg = z.negative_part();
    return forms_isomorphic(pos, neg);
}

bool gw_equal(const DiagonalForm& x, const DiagonalForm& y) {
    return gw_equal(GWElement::of_form(x), GWElement::of_form(y));
}

// ---------------------------------------------------------------------------
// Isotropy and Witt decomposition

namespace {

bool is_isotropic_padic(int rank, const SquareClass& det, int hasse, std::int64_t p) {
    // Criteria in terms of det class d and Hasse symbol eps over Q_p.
    if (rank <= 1) return false;
    if (rank >= 5) return true;
    Place v = Place::prime(p);
    FieldDescriptor qp = FieldDescriptor::padic(p);
    Rational d(det.canonical_integer());
    if (rank == 2) return det == SquareClass::of_rational(qp, -1);
    if (rank == 3) return hasse == hilbert_symbol(v, Rational(-1), -d);
    // rank 4
    if (!(det == SquareClass::one(qp))) return true;
    return hasse == hilbert_symbol(v, Rational(-1), Rational(-1));
}

}  // namespace

bool is_isotropic(const DiagonalForm& f) {
    int n = f.rank();
    if (n <= 1) return false;
    switch (f.field.kind) {
        case FieldKind::AlgClosed:
            return true;
        case FieldKind::Real: {
            std::int64_t s = signature_of(f);
            return s != n && s != -n;
        }
        case FieldKind::Finite:
            if (n >= 3) return true;
            return det_class(f) == minus_one_class(f.field);
        case FieldKind::Padic:
            return is_isotropic_padic(n, det_class(f), hasse_invariant(f, Place::prime(f.field.p)),
                                      f.field.p);
        case FieldKind::Rational: {
            if (n == 2) return det_class(f) == minus_one_class(f.field);
            std::int64_t s = signature_of(f);
            if (s == n || s == -n) return false;  // definite
            if (n >= 5) return true;              // indefinite of rank >= 5 (local criteria all pass)
            for (const auto& v : form_places(f)) {
                if (v.real) continue;
                SquareClass dp = SquareClass::of_rational(FieldDescriptor::padic(v.p),
                                                          Rational(det_class(f).canonical_integer()));
                if (!is_isotropic_padic(n, dp, hasse_invariant(f, v), v.p)) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

std::vector<SquareClass> kernel_search_pool(const DiagonalForm& f) {
    const auto& F = f.field;
    switch (F.kind) {
        case FieldKind::AlgClosed:
        case FieldKind::Real:
        case FieldKind::Finite:
        case FieldKind::Padic:
            return square_class_group(F);
        case FieldKind::Rational: {
            std::set<std::int64_t> ps{2};
            for (const auto& c : f.entries)
                for (auto p : c.primes()) ps.insert(p);
            std::vector<SquareClass> pool;
            std::vector<std::int64_t> plist(ps.begin(), ps.end());
            size_t n = plist.size();
            for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
                Rational v = 1;
                for (size_t i = 0; i < n; ++i)
                    if (mask & (size_t{1} << i)) v *= plist[i];
                pool.push_back(SquareClass::of_rational(F, v));
                pool.push_back(SquareClass::of_rational(F, -v));
            }
            std::sort(pool.begin(), pool.end());
            return pool;
        }
    }
    return {};
}

DiagonalForm hyperbolic_plane(const FieldDescriptor& f) {
    std::vector<SquareClass> cs{SquareClass::one(f),
                                f.kind == FieldKind::Finite
                                    ? SquareClass::of(FieldElement::from_integer(f, -1))
                                    : SquareClass::of_rational(f, -1)};
    return DiagonalForm::of_classes(f, std::move(cs));
}

// Enumerate nondecreasing index multisets of size r over [0, pool); returns
// false when exhausted.
bool next_multiset(std::vector<int>& idx, int pool) {
    for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
        if (idx[i] + 1 < pool) {
            int v = idx[i] + 1;
            for (size_t j = i; j < idx.size(); ++j) idx[j] = v;
            return true;
        }
    }
    return false;
}

}  // namespace

WittDecomposition witt_decompose(const DiagonalForm& f) {
    const auto& F = f.field;
    if (!is_isotropic(f)) return {f, 0};
    auto pool = kernel_search_pool(f);
    DiagonalForm H = hyperbolic_plane(F);
    GWElement target = GWElement::of_form(f);
    for (int r = f.rank() % 2; r <= f.rank(); r += 2) {
        std::int64_t k = (f.rank() - r) / 2;
        GWElement hyp = GWElement::of_form(H).scale(k);
        std::vector<int> idx(r, 0);
        bool more = r > 0;
        if (r == 0) {
            DiagonalForm cand{F, {}};
            if (gw_equal(target, hyp)) return {cand, k};
            continue;
        }
        do {
            std::vector<SquareClass> cs;
            cs.reserve(r);
            for (int i : idx) cs.push_back(pool[i]);
            DiagonalForm cand = DiagonalForm::of_classes(F, cs);
            if (!is_isotropic(cand) && gw_equal(target, GWElement::of_form(cand) + hyp))
                return {cand, k};
        } while ((more = next_multiset(idx, static_cast<int>(pool.size()))));
    }
    throw std::runtime_error("witt_decompose: no anisotropic kernel found in the search pool for " +
                             f.to_string());
}

// ---------------------------------------------------------------------------
// Pfister and norm-quadric forms

DiagonalForm pfister_form_classes(const FieldDescriptor& f, const std::vector<SquareClass>& slots) {
    size_t n = slots.size();
    SquareClass m1 = f.kind == FieldKind::Finite ? SquareClass::of(FieldElement::from_integer(f, -1))
                                                 : SquareClass::of_rational(f, -1);
    std::vector<SquareClass> entries;
    entries.reserve(size_t{1} << n);
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        SquareClass e = SquareClass::one(f);
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) e = e * m1 * slots[i];
        entries.push_back(e);
    }
    return DiagonalForm::of_classes(f, std::move(entries));
}

DiagonalForm pfister_form(const FieldDescriptor& f, const std::vector<FieldElement>& slots) {
    std::vector<SquareClass> cs;
    cs.reserve(slots.size());
    for (const auto& b : slots) {
        if (b.is_zero()) throw std::invalid_argument("pfister_form: zero slot");
        cs.push_back(SquareClass::of(b));
    }
    return pfister_form_classes(f, cs);
}

DiagonalForm norm_quadric_form(const FieldDescriptor& f, const std::vector<FieldElement>& slots) {
    if (slots.size() < 2) throw std::invalid_argument("norm_quadric_form: need n >= 2 slots");
    for (const auto& a : slots)
        if (a.is_zero()) throw std::invalid_argument("norm_quadric_form: zero slot");
    std::vector<FieldElement> head(slots.begin(), slots.end() - 1);
    DiagonalForm q = pfister_form(f, head);
    q.entries.push_back(SquareClass::of(slots.back().negate()));
    return q;
}

// ---------------------------------------------------------------------------
// Gram diagonalization

DiagonalForm diagonalize_gram(const FieldDescriptor& f,
                              const std::vector<std::vector<FieldElement>>& gram) {
    size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw std::invalid_argument("diagonalize_gram: matrix not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!(gram[i][j] == gram[j][i]))
                throw std::invalid_argument("diagonalize_gram: matrix not symmetric");

    auto M = gram;
    auto swap_rc = [&](size_t i, size_t j) {
        std::swap(M[i], M[j]);
        for (size_t r = 0; r < n; ++r) std::swap(M[r][i], M[r][j]);
    };

    std::vector<FieldElement> diag;
    for (size_t k = 0; k < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t pivot = n;
            for (size_t i = k; i < n; ++i)
                if (!M[i][i].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < n) {
                swap_rc(k, pivot);
            } else {
                // all remaining diagonal entries vanish; find off-diagonal
                size_t bi = n, bj = n;
                for (size_t i = k; i < n && bi == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (!M[i][j].is_zero()) {
                            bi = i;
                            bj = j;
                            break;
                        }
                if (bi == n) throw std::invalid_argument("diagonalize_gram: singular matrix");
                // row/col move: e_bi += e_bj makes the (bi,bi) entry 2*M[bi][bj]
                for (size_t c = 0; c < n; ++c) M[bi][c] = M[bi][c] + M[bj][c];
                for (size_t r = 0; r < n; ++r) M[r][bi] = M[r][bi] + M[r][bj];
                swap_rc(k, bi);
            }
        }
        FieldElement piv = M[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (M[i][k].is_zero()) continue;
            FieldElement lam = M[i][k] * piv.inverse();
            for (size_t c = 0; c < n; ++c) M[i][c] = M[i][c] - lam * M[k][c];
            for (size_t r = 0; r < n; ++r) M[r][i] = M[r][i] - lam * M[r][k];
        }
        diag.push_back(M[k][k]);
    }
    return DiagonalForm::of_elements(f, diag);
}

// ---------------------------------------------------------------------------
// WittRing

namespace {

std::string witt_key(const DiagonalForm& aniso) {
    std::string key = "r" + std::to_string(aniso.rank());
    const auto& F = aniso.field;
    if (aniso.rank() == 0) return key;
    if (F.kind == FieldKind::Finite) {
        key += "|d" + det_class(aniso).to_string();
    } else if (F.kind == FieldKind::Padic) {
        key += "|d" + det_class(aniso).to_string();
        key += "|h" + std::to_string(hasse_invariant(aniso, Place::prime(F.p)));
    } else {
        throw std::invalid_argument("witt ring tables exist only for F_q and Q_p (odd p)");
    }
    return key;
}

}  // namespace

WittRing build_witt_ring(const FieldDescriptor& f) {
    if (!(f.kind == FieldKind::Finite || (f.kind == FieldKind::Padic && f.p != 2)))
        throw std::invalid_argument("witt ring table: field must be F_q or Q_p with p odd (" +
                                    f.to_string() + " has an infinite or unsupported Witt ring)");
    WittRing w;
    w.field_ = f;

    auto intern = [&](const DiagonalForm& form) {
        DiagonalForm aniso = witt_decompose(form).anisotropic;
        std::string key = witt_key(aniso);
        auto it = w.key_to_id_.find(key);
        if (it != w.key_to_id_.end()) return it->second;
        int id = static_cast<int>(w.reps_.size());
        w.reps_.push_back(aniso);
        w.key_to_id_.emplace(key, id);
        return id;
    };

    DiagonalForm zero_form{f, {}};
    w.zero_ = intern(zero_form);
    auto classes = square_class_group(f);
    for (const auto& c : classes) intern(DiagonalForm::of_classes(f, {c}));
    w.one_ = intern(DiagonalForm::of_classes(f, {SquareClass::one(f)}));

    // close under + and *
    bool grew = true;
    while (grew) {
        grew = false;
        size_t sz = w.reps_.size();
        for (size_t i = 0; i < sz; ++i) {
            for (size_t j = 0; j < sz; ++j) {
                DiagonalForm sum = w.reps_[i].concat(w.reps_[j]);
                DiagonalForm prod =
                    (GWElement::of_form(w.reps_[i]) * GWElement::of_form(w.reps_[j])).positive_part();
                if (static_cast<size_t>(intern(sum)) >= sz) grew = true;
                if (static_cast<size_t>(intern(prod)) >= sz) grew = true;
            }
        }
    }

    int n = static_cast<int>(w.reps_.size());
    w.add_.assign(n, std::vector<int>(n, 0));
    w.mul_.assign(n, std::vector<int>(n, 0));
    w.neg_.assign(n, 0);
    w.even_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        w.even_[i] = w.reps_[i].rank() % 2 == 0;
        SquareClass m1 = f.kind == FieldKind::Finite
                             ? SquareClass::of(FieldElement::from_integer(f, -1))
                             : SquareClass::of_rational(f, -1);
        std::vector<SquareClass> neg_entries;
        for (const auto& c : w.reps_[i].entries) neg_entries.push_back(c * m1);
        w.neg_[i] = intern(DiagonalForm::of_classes(f, neg_entries));
        for (int j = 0; j < n; ++j) {
            w.add_[i][j] = intern(w.reps_[i].concat(w.reps_[j]));
            w.mul_[i][j] =
                intern((GWElement::of_form(w.reps_[i]) * GWElement::of_form(w.reps_[j])).positive_part());
        }
    }

    // I-adic filtration
    auto additive_closure = [&](std::set<int> seed) {
        seed.insert(w.zero_);
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> elems(seed.begin(), seed.end());
            for (int a : elems)
                for (int b : elems)
                    if (seed.insert(w.add_[a][b]).second) changed = true;
        }
        return seed;
    };
    std::set<int> all;
    for (int i = 0; i < n; ++i) all.insert(i);
    std::set<int> ideal;
    for (int i = 0; i < n; ++i)
        if (w.even_[i]) ideal.insert(i);
    w.ideal_powers_.push_back(all);
    w.ideal_powers_.push_back(additive_closure(ideal));
    while (w.ideal_powers_.back().size() > 1) {
        const auto& prev = w.ideal_powers_.back();
        std::set<int> next;
        for (int a : prev)
            for (int b : w.ideal_powers_[1])
                next.insert(w.mul_[a][b]);
        w.ideal_powers_.push_back(additive_closure(next));
    }
    return w;
}

const WittRing& WittRing::of(const FieldDescriptor& f) {
    static std::map<std::string, WittRing> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(f.to_string());
    if (it != cache.end()) return it->second;
    return cache.emplace(f.to_string(), build_witt_ring(f)).first->second;
}

int WittRing::class_of(const DiagonalForm& f) const {
    DiagonalForm aniso = witt_decompose(f).anisotropic;
    auto it = key_to_id_.find(witt_key(aniso));
    if (it == key_to_id_.end()) throw std::logic_error("witt class outside the closed table");
    return it->second;
}

int WittRing::class_of(const GWElement& x) const {
    // -m<a> = m<-a> in W(F)
    SquareClass m1 = field_.kind == FieldKind::Finite
                         ? SquareClass::of(FieldElement::from_integer(field_, -1))
                         : SquareClass::of_rational(field_, -1);
    std::vector<SquareClass> entries;
    for (const auto& [c, m] : x.terms()) {
        for (std::int64_t i = 0; i < (m > 0 ? m : -m); ++i) entries.push_back(m > 0 ? c : c * m1);
    }
    return class_of(DiagonalForm::of_classes(field_, entries));
}

int WittRing::graded_dimension(int n) const {
    auto size_at = [&](int k) -> size_t {
        if (k < static_cast<int>(ideal_powers_.size())) return ideal_powers_[k].size();
        return 1;  // stabilized at {0}
    };
    size_t a = size_at(n), b = size_at(n + 1);
    size_t ratio = a / b;
    int dim = 0;
    while (ratio > 1) {
        if (ratio % 2 != 0) throw std::logic_error("I^n/I^{n+1} is not an elementary 2-group");
        ratio /= 2;
        ++dim;
    }
    return dim;
}

int WittRing::element_order(int a) const {
    int acc = a, order = 1;
    while (acc != zero_) {
        acc = add_[acc][a];
        ++order;
        if (order > size()) throw std::logic_error("additive order exceeds group size");
    }
    return order;
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

std::string render_additive(const std::vector<CyclicFactor>& factors) {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += " + ";
        s += f.order == 0 ? "Z" : "Z/" + std::to_string(f.order);
    }
    return s.empty() ? "0" : s;
}

// order statistics: #elements of order dividing k in prod Z/d_i
std::int64_t count_order_dividing(const std::vector<std::int64_t>& ds, std::int64_t k) {
    std::int64_t c = 1;
    for (auto d : ds) c *= std::gcd(d, k);
    return c;
}

std::vector<std::int64_t> detect_abelian_structure(const WittRing& w) {
    int n = w.size();
    std::vector<int> orders(n);
    for (int i = 0; i < n; ++i) orders[i] = w.element_order(i);
    // enumerate candidate invariant-factor decompositions of order n
    std::vector<std::vector<std::int64_t>> candidates;
    std::vector<std::int64_t> cur;
    // factors ascending, each dividing the next
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t minf) {
        if (remaining == 1) {
            candidates.push_back(cur);
            return;
        }
        for (std::int64_t d = minf; d <= remaining; ++d) {
            if (remaining % d != 0) continue;
            if (!cur.empty() && d % cur.back() != 0) continue;
            cur.push_back(d);
            rec(remaining / d, d);
            cur.pop_back();
        }
    };
    rec(n, 2);
    for (const auto& cand : candidates) {
        bool ok = true;
        for (std::int64_t k = 1; k <= n && ok; ++k) {
            std::int64_t expect = count_order_dividing(cand, k);
            std::int64_t actual = std::count_if(orders.begin(), orders.end(),
                                                [&](int o) { return k % o == 0; });
            ok = expect == actual;
        }
        if (ok) return cand;
    }
    throw std::logic_error("could not identify the additive group structure");
}

std::string element_label(const WittRing& w, int id) {
    if (id == w.zero()) return "0";
    return w.rep(id).to_string();
}

}  // namespace

FiniteRingPresentation witt_ring_table(const FieldDescriptor& f) {
    const WittRing& w = WittRing::of(f);
    FiniteRingPresentation pres;
    pres.field = f;
    pres.ring = "W";
    int n = w.size();

    auto factors = detect_abelian_structure(w);
    // deterministic generator selection: prefer <1>, then <1>-<u>, then ids
    std::vector<int> pref;
    pref.push_back(w.one());
    for (const auto& u : square_class_group(f)) {
        GWElement d = GWElement::of_class(SquareClass::one(f)) - GWElement::of_class(u);
        pref.push_back(w.class_of(d));
    }
    for (int i = 0; i < n; ++i) pref.push_back(i);
    std::vector<std::string> pref_labels;
    pref_labels.push_back("<1>");
    for (const auto& u : square_class_group(f)) pref_labels.push_back("<1>-<" + u.to_string() + ">");
    for (int i = 0; i < n; ++i) pref_labels.push_back(element_label(w, i));

    std::set<int> span{w.zero()};
    auto closure_with = [&](std::set<int> s, int g) {
        s.insert(g);
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> e(s.begin(), s.end());
            for (int a : e)
                for (int b : e)
                    if (s.insert(w.add(a, b)).second) changed = true;
        }
        return s;
    };
    // invariant factors descending for the greedy pick
    std::vector<std::int64_t> desc(factors.rbegin(), factors.rend());
    for (auto d : desc) {
        bool found = false;
        for (size_t k = 0; k < pref.size() && !found; ++k) {
            int g = pref[k];
            if (w.element_order(g) != d) continue;
            auto bigger = closure_with(span, g);
            if (bigger.size() == span.size() * d) {
                pres.additive.push_back({d, pref_labels[k]});
                span = bigger;
                found = true;
            }
        }
        if (!found) throw std::logic_error("generator extraction failed");
    }
    if (static_cast<int>(span.size()) != n) throw std::logic_error("generators do not span W");
    std::reverse(pres.additive.begin(), pres.additive.end());  // ascending factor order
    pres.additive_type = render_additive(pres.additive);

    for (int i = 0; i < n; ++i) pres.elements.push_back(element_label(w, i));
    pres.add_table.assign(n, std::vector<int>(n));
    pres.mul_table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            pres.add_table[i][j] = w.add(i, j);
            pres.mul_table[i][j] = w.mul(i, j);
        }

    // exhaustive ring axioms (<= 16 elements)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (w.add(a, b) != w.add(b, a) || w.mul(a, b) != w.mul(b, a))
                throw std::logic_error("witt table: commutativity failure");
            for (int c = 0; c < n; ++c) {
                if (w.add(w.add(a, b), c) != w.add(a, w.add(b, c)))
                    throw std::logic_error("witt table: additive associativity failure");
                if (w.mul(w.mul(a, b), c) != w.mul(a, w.mul(b, c)))
                    throw std::logic_error("witt table: multiplicative associativity failure");
                if (w.mul(a, w.add(b, c)) != w.add(w.mul(a, b), w.mul(a, c)))
                    throw std::logic_error("witt table: distributivity failure");
            }
        }

    // distinguished ideal generators: smallest generating set for I
    const auto& I = w.ideal_powers()[1];
    auto ideal_closure = [&](const std::vector<int>& gens) {
        std::set<int> s{w.zero()};
        for (int g : gens)
            for (int r = 0; r < n; ++r) s.insert(w.mul(g, r));
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> e(s.begin(), s.end());
            for (int a : e)
                for (int b : e)
                    if (s.insert(w.add(a, b)).second) changed = true;
        }
        return s;
    };
    std::vector<int> ideal_ids(I.begin(), I.end());
    bool done = false;
    for (int g : ideal_ids) {
        if (ideal_closure({g}) == I) {
            pres.ideal_generators.push_back(element_label(w, g));
            done = true;
            break;
        }
    }
    for (size_t i = 0; i < ideal_ids.size() && !done; ++i)
        for (size_t j = i + 1; j < ideal_ids.size() && !done; ++j)
            if (ideal_closure({ideal_ids[i], ideal_ids[j]}) == I) {
                pres.ideal_generators.push_back(element_label(w, ideal_ids[i]));
                pres.ideal_generators.push_back(element_label(w, ideal_ids[j]));
                done = true;
            }
    for (size_t i = 0; i < ideal_ids.size() && !done; ++i)
        for (size_t j = i + 1; j < ideal_ids.size() && !done; ++j)
            for (size_t k = j + 1; k < ideal_ids.size() && !done; ++k)
                if (ideal_closure({ideal_ids[i], ideal_ids[j], ideal_ids[k]}) == I) {
                    pres.ideal_generators = {element_label(w, ideal_ids[i]),
                                             element_label(w, ideal_ids[j]),
                                             element_label(w, ideal_ids[k])};
                    done = true;
                }
    return pres;
}

// ---------------------------------------------------------------------------
// GW additive presentation via Smith normal form

namespace {

struct SNFResult {
    std::vector<std::int64_t> diag;             // d_1, d_2, ... (0 allowed)
    std::vector<std::vector<std::int64_t>> W;   // U^{-1}: new generators in the old basis (columns)
};

SNFResult smith_normal_form(std::vector<std::vector<std::int64_t>> M, size_t gens) {
    size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    // W tracks U^{-1} so columns give the new generating set; row ops on M
    // correspond to column ops on W.
    std::vector<std::vector<std::int64_t>> W(gens, std::vector<std::int64_t>(gens, 0));
    for (size_t i = 0; i < gens; ++i) W[i][i] = 1;

    auto row_swap = [&](size_t i, size_t j) {
        std::swap(M[i], M[j]);
        for (size_t r = 0; r < gens; ++r) std::swap(W[r][i], W[r][j]);
    };
    auto row_add = [&](size_t dst, size_t src, std::int64_t k) {  // M[dst] += k*M[src]
        for (size_t c = 0; c < cols; ++c) M[dst][c] += k * M[src][c];
        for (size_t r = 0; r < gens; ++r) W[r][src] -= k * W[r][dst];
    };
    auto row_neg = [&](size_t i) {
        for (size_t c = 0; c < cols; ++c) M[i][c] = -M[i][c];
        for (size_t r = 0; r < gens; ++r) W[r][i] = -W[r][i];
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t r = 0; r < rows; ++r) std::swap(M[r][i], M[r][j]);
    };
    auto col_add = [&](size_t dst, size_t src, std::int64_t k) {
        for (size_t r = 0; r < rows; ++r) M[r][dst] += k * M[r][src];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot at (>=t, >=t)
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows && pi == rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (M[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        row_swap(t, pi);
        col_swap(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i)
                while (M[i][t] != 0) {
                    std::int64_t q = M[i][t] / M[t][t];
                    row_add(i, t, -q);
                    if (M[i][t] != 0) {
                        row_swap(t, i);
                        clean = false;
                    }
                }
            for (size_t j = t + 1; j < cols; ++j)
                while (M[t][j] != 0) {
                    std::int64_t q = M[t][j] / M[t][t];
                    col_add(j, t, -q);
                    if (M[t][j] != 0) {
                        col_swap(t, j);
                        clean = false;
                    }
                }
        }
        if (M[t][t] < 0) row_neg(t);
        ++t;
    }
    // enforce the divisibility chain
    for (size_t i = 0; t > 0 && i + 1 < t; ++i) {
        for (size_t j = i + 1; j < t; ++j) {
            if (M[i][i] != 0 && M[j][j] % M[i][i] == 0) continue;
            // fold entry j into the pivot chain
            col_add(i, j, 1);
            size_t back = i;
            // redo reduction from position i
            while (back < t) {
                bool clean2 = false;
                while (!clean2) {
                    clean2 = true;
                    for (size_t r = back + 1; r < rows; ++r)
                        while (M[r][back] != 0) {
                            std::int64_t q = M[r][back] / M[back][back];
                            row_add(r, back, -q);
                            if (M[r][back] != 0) {
                                row_swap(back, r);
                                clean2 = false;
                            }
                        }
                    for (size_t c = back + 1; c < cols; ++c)
                        while (M[back][c] != 0) {
                            std::int64_t q = M[back][c] / M[back][back];
                            col_add(c, back, -q);
                            if (M[back][c] != 0) {
                                col_swap(back, c);
                                clean2 = false;
                            }
                        }
                }
                if (M[back][back] < 0) row_neg(back);
                ++back;
            }
            j = i;  // re-check the chain from this pivot
        }
    }
    SNFResult out;
    out.W = W;
    for (size_t i = 0; i < std::min(rows, cols); ++i) out.diag.push_back(M[i][i]);
    return out;
}

}  // namespace

FiniteRingPresentation gw_table(const FieldDescriptor& f) {
    auto classes = square_class_group(f);  // throws over Q
    size_t g = classes.size();

    // relations from all rank-2 equalities <u,v> = <x,y>; complete because
    // any GW equality is a chain of two-entry moves
    std::vector<std::vector<std::int64_t>> rel;
    for (size_t a = 0; a < g; ++a)
        for (size_t b = a; b < g; ++b)
            for (size_t c = 0; c < g; ++c)
                for (size_t d = c; d < g; ++d) {
                    if (std::make_pair(a, b) >= std::make_pair(c, d)) continue;
                    DiagonalForm f1 = DiagonalForm::of_classes(f, {classes[a], classes[b]});
                    DiagonalForm f2 = DiagonalForm::of_classes(f, {classes[c], classes[d]});
                    if (!gw_equal(f1, f2)) continue;
                    std::vector<std::int64_t> row(g, 0);
                    row[a] += 1;
                    row[b] += 1;
                    row[c] -= 1;
                    row[d] -= 1;
                    bool zero = std::all_of(row.begin(), row.end(), [](auto x) { return x == 0; });
                    if (!zero) rel.push_back(row);
                }
    // transpose: SNF of the gens x relations matrix
    std::vector<std::vector<std::int64_t>> M(g, std::vector<std::int64_t>(std::max<size_t>(rel.size(), 1), 0));
    for (size_t r = 0; r < rel.size(); ++r)
        for (size_t c = 0; c < g; ++c) M[c][r] = rel[r][c];
    auto snf = smith_normal_form(M, g);

    FiniteRingPresentation pres;
    pres.field = f;
    pres.ring = "GW";
    auto label_of_column = [&](size_t j) {
        std::string s;
        for (size_t i = 0; i < g; ++i) {
            std::int64_t c = snf.W[i][j];
            if (c == 0) continue;
            if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
            std::int64_t a = c < 0 ? -c : c;
            if (a != 1) s += std::to_string(a) + "*";
            s += "<" + classes[i].to_string() + ">";
        }
        return s.empty() ? "0" : s;
    };
    std::vector<CyclicFactor> torsion, free_part;
    for (size_t j = 0; j < g; ++j) {
        std::int64_t d = j < snf.diag.size() ? snf.diag[j] : 0;
        if (d == 1) continue;  // trivial factor
        if (d == 0)
            free_part.push_back({0, label_of_column(j)});
        else
            torsion.push_back({d, label_of_column(j)});
    }
    std::sort(torsion.begin(), torsion.end(),
              [](const CyclicFactor& a, const CyclicFactor& b) { return a.order < b.order; });
    pres.additive = free_part;
    pres.additive.insert(pres.additive.end(), torsion.begin(), torsion.end());
    pres.additive_type = render_additive(pres.additive);
    return pres;
}

// ---------------------------------------------------------------------------
// Graded pieces

namespace {

std::string pfister_label(const std::vector<SquareClass>& slots) {
    std::string s = "<<";
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ",";
        s += slots[i].to_string();
    }
    return s + ">>";
}

std::vector<std::string> finite_graded_generators(const WittRing& w, int n) {
    if (n == 0) return {"<1>"};
    const auto& f = w.field();
    auto classes = square_class_group(f);
    const auto& powers = w.ideal_powers();
    auto in_level = [&](int lvl, int id) {
        if (lvl < static_cast<int>(powers.size())) return powers[lvl].count(id) > 0;
        return id == w.zero();
    };
    int dim = w.graded_dimension(n);
    std::vector<std::string> out;
    // greedy: collect Pfister classes independent in I^n / I^{n+1}
    std::set<int> span;
    if (n + 1 < static_cast<int>(powers.size()))
        span = powers[n + 1];
    else
        span = {w.zero()};
    auto add_span = [&](int g) {
        span.insert(g);
        bool ch = true;
        while (ch) {
            ch = false;
            std::vector<int> e(span.begin(), span.end());
            for (int a : e)
                for (int b : e)
                    if (span.insert(w.add(a, b)).second) ch = true;
        }
    };
    std::vector<int> idx(n, 0);
    do {
        std::vector<SquareClass> slots;
        for (int i : idx) slots.push_back(classes[i]);
        int id = w.class_of(pfister_form_classes(f, slots));
        if (!in_level(n, id)) throw std::logic_error("Pfister class escapes I^n");
        if (!span.count(id)) {
            out.push_back(pfister_label(slots));
            add_span(id);
            if (static_cast<int>(out.size()) == dim) break;
        }
    } while (next_multiset(idx, static_cast<int>(classes.size())));
    if (static_cast<int>(out.size()) != dim) throw std::logic_error("Pfister generators do not span");
    return out;
}

std::vector<std::int64_t> primes_up_to(int bound) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime_i64(p)) ps.push_back(p);
    return ps;
}

}  // namespace

GradedWittPiece graded_witt(const FieldDescriptor& f, int degree, const Bounds& bounds) {
    if (degree < 0) throw std::invalid_argument("graded_witt: negative degree");
    GradedWittPiece piece;
    piece.field = f;
    piece.degree = degree;
    switch (f.kind) {
        case FieldKind::AlgClosed:
            piece.model = "closed-form";
            piece.dimension = degree == 0 ? 1 : 0;
            if (degree == 0) piece.generators = {"<1>"};
            break;
        case FieldKind::Real: {
            piece.model = "closed-form";
            piece.dimension = 1;
            if (degree == 0) {
                piece.generators = {"<1>"};
            } else {
                std::vector<SquareClass> slots(degree, SquareClass::of_rational(f, -1));
                piece.generators = {pfister_label(slots)};
            }
            break;
        }
        case FieldKind::Finite:
        case FieldKind::Padic: {
            const WittRing& w = WittRing::of(f);
            piece.model = "table";
            piece.dimension = w.graded_dimension(degree);
            if (piece.dimension > 0) piece.generators = finite_graded_generators(w, degree);
            break;
        }
        case FieldKind::Rational: {
            piece.model = degree <= 3 ? "derived-model" : "derived-model";
            piece.prime_bound = bounds.prime_bound;
            auto ps = primes_up_to(bounds.prime_bound);
            if (degree == 0) {
                piece.dimension = 1;
                piece.generators = {"<1>"};
            } else if (degree == 1) {
                piece.dimension = 1 + static_cast<int>(ps.size());
                piece.generators.push_back(pfister_label({SquareClass::of_rational(f, -1)}));
                for (auto p : ps)
                    piece.generators.push_back(pfister_label({SquareClass::of_rational(f, p)}));
            } else if (degree == 2) {
                piece.dimension = static_cast<int>(ps.size());
                // greedy search over small slot pairs for classes spanning the
                // even-support local-invariant space
                std::vector<Rational> pool{-1};
                for (auto p : ps) pool.push_back(Rational(p));
                std::vector<Place> places{Place::real_place()};
                for (auto p : ps) places.push_back(Place::prime(p));
                std::vector<std::vector<int>> basis;
                auto bits_of = [&](const Rational& x, const Rational& y) {
                    std::vector<int> bits;
                    for (const auto& v : places) bits.push_back(hilbert_symbol(v, x, y) == -1 ? 1 : 0);
                    return bits;
                };
                auto reduce = [&](std::vector<int> v) {
                    for (const auto& b : basis) {
                        auto lead = std::find(b.begin(), b.end(), 1) - b.begin();
                        if (v[lead]) {
                            for (size_t i = 0; i < v.size(); ++i) v[i] ^= b[i];
                        }
                    }
                    return v;
                };
                for (size_t i = 0; i < pool.size() && static_cast<int>(basis.size()) < piece.dimension; ++i)
                    for (size_t j = i; j < pool.size() && static_cast<int>(basis.size()) < piece.dimension; ++j) {
                        auto bits = reduce(bits_of(pool[i], pool[j]));
                        if (std::any_of(bits.begin(), bits.end(), [](int b) { return b; })) {
                            basis.push_back(bits);
                            // re-echelonize basis for stable reduction
                            std::sort(basis.begin(), basis.end(), [](auto& a, auto& b2) {
                                return std::find(a.begin(), a.end(), 1) - a.begin() <
                                       std::find(b2.begin(), b2.end(), 1) - b2.begin();
                            });
                            piece.generators.push_back(
                                pfister_label({SquareClass::of_rational(f, -pool[i]),
                                               SquareClass::of_rational(f, -pool[j])}));
                        }
                    }
            } else {
                piece.dimension = 1;
                std::vector<SquareClass> slots(degree, SquareClass::of_rational(f, -1));
                piece.generators = {pfister_label(slots)};
            }
            break;
        }
    }
    return piece;
}

// ---------------------------------------------------------------------------
// Eq.-(1.1) rewrite chains over Q

namespace {

using ClassKey = std::vector<std::string>;

ClassKey key_of(const std::vector<SquareClass>& cs) {
    ClassKey k;
    for (const auto& c : cs) k.push_back(c.to_string());
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

std::optional<std::vector<DiagonalForm>> gw_rewrite_chain(const DiagonalForm& from,
                                                          const DiagonalForm& to, int height,
                                                          int max_states) {
    if (!(from.field == to.field) || from.field.kind != FieldKind::Rational)
        throw std::invalid_argument("gw_rewrite_chain works over Q");
    if (from.rank() != to.rank()) return std::nullopt;

    auto within_height = [&](const SquareClass& c) {
        BigInt n = c.canonical_integer();
        if (n < 0) n = -n;
        return n <= height;
    };

    auto neighbors = [&](const std::vector<SquareClass>& state) {
        std::vector<std::vector<SquareClass>> out;
        size_t n = state.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                BigInt ri = state[i].canonical_integer();
                BigInt rj = state[j].canonical_integer();
                // scaled representatives a = ri*s^2, b = rj (square scaling is free)
                for (std::int64_t s = 1; s * s * (ri < 0 ? -ri : ri) <= height * 4; ++s) {
                    Rational a = Rational(ri) * s * s;
                    Rational b(rj);
                    if (a + b == 0) continue;
                    SquareClass c1 = SquareClass::of_rational(from.field, a + b);
                    SquareClass c2 = SquareClass::of_rational(from.field, a * b * (a + b));
                    if (!within_height(c1) || !within_height(c2)) continue;
                    auto next = state;
                    next[i] = c1;
                    next[j] = c2;
                    std::sort(next.begin(), next.end());
                    out.push_back(next);
                }
            }
        return out;
    };

    std::vector<SquareClass> src = from.entries, dst = to.entries;
    std::sort(src.begin(), src.end());
    std::sort(dst.begin(), dst.end());

    std::set<ClassKey> seen_fwd{key_of(src)}, seen_bwd{key_of(dst)};
    std::map<ClassKey, std::vector<SquareClass>> state_fwd{{key_of(src), src}},
        state_bwd{{key_of(dst), dst}};
    std::map<ClassKey, ClassKey> parent_fwd, parent_bwd;
    std::deque<std::vector<SquareClass>> q_fwd{src}, q_bwd{dst};

    auto reconstruct = [&](const ClassKey& meet) {
        std::vector<std::vector<SquareClass>> left;
        ClassKey cur = meet;
        while (true) {
            left.push_back(state_fwd.at(cur));
            auto it = parent_fwd.find(cur);
            if (it == parent_fwd.end()) break;
            cur = it->second;
        }
        std::reverse(left.begin(), left.end());
        cur = meet;
        while (true) {
            auto it = parent_bwd.find(cur);
            if (it == parent_bwd.end()) break;
            cur = it->second;
            left.push_back(state_bwd.at(cur));
        }
        std::vector<DiagonalForm> chain;
        for (auto& st : left) chain.push_back(DiagonalForm::of_classes(from.field, st));
        return chain;
    };

    if (key_of(src) == key_of(dst)) return reconstruct(key_of(src));

    int expanded = 0;
    while ((!q_fwd.empty() || !q_bwd.empty()) && expanded < max_states) {
        bool fwd = q_bwd.empty() || (!q_fwd.empty() && q_fwd.size() <= q_bwd.size());
        auto& q = fwd ? q_fwd : q_bwd;
        auto& seen = fwd ? seen_fwd : seen_bwd;
        auto& states = fwd ? state_fwd : state_bwd;
        auto& parent = fwd ? parent_fwd : parent_bwd;
        auto& other_seen = fwd ? seen_bwd : seen_fwd;
        if (q.empty()) continue;
        auto cur = q.front();
        q.pop_front();
        ++expanded;
        for (auto& nb : neighbors(cur)) {
            ClassKey k = key_of(nb);
            if (!seen.insert(k).second) continue;
            states.emplace(k, nb);
            parent.emplace(k, key_of(cur));
            if (other_seen.count(k)) {
                // make sure both sides know the meeting state
                (fwd ? state_bwd : state_fwd).emplace(k, nb);
                return reconstruct(k);
            }
            q.push_back(nb);
        }
    }
    return std::nullopt;
}

}  // namespace mwb
