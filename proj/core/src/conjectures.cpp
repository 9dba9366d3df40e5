#include "milnorwb/conjectures.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace mwb {

std::string PfisterPresentation::to_string() const {
    std::string s = "<<";
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) s += ",";
        s += slots[i].to_string();
    }
    return s + ">>";
}

bool verify_chain(const EquivalenceChain& chain) {
    if (chain.steps.size() != chain.links.size() + 1) return false;
    for (size_t k = 0; k < chain.links.size(); ++k) {
        const auto& a = chain.steps[k];
        const auto& b = chain.steps[k + 1];
        const auto& link = chain.links[k];
        if (a.slots.size() != b.slots.size()) return false;
        for (size_t t = 0; t < a.slots.size(); ++t) {
            if (static_cast<int>(t) == link.i || static_cast<int>(t) == link.j) continue;
            if (!(a.slots[t] == b.slots[t])) return false;
        }
        if (!(a.slots[link.i] == link.old_pair[0]) || !(a.slots[link.j] == link.old_pair[1]))
            return false;
        if (!(b.slots[link.i] == link.new_pair[0]) || !(b.slots[link.j] == link.new_pair[1]))
            return false;
        DiagonalForm f1 = pfister_form_classes(a.field, link.old_pair);
        DiagonalForm f2 = pfister_form_classes(a.field, link.new_pair);
        if (!gw_equal(f1, f2)) return false;
    }
    return true;
}

namespace {

std::vector<SquareClass> chain_pool(const FieldDescriptor& f, const Bounds& bounds) {
    if (f.kind != FieldKind::Rational) return square_class_group(f);
    std::vector<SquareClass> pool;
    for (int n = 1; n <= bounds.height; ++n) {
        BigInt sq = 1;
        for (const auto& [p, e] : factor(BigInt(n)))
            if (e % 2) sq *= p;
        if (sq != n) continue;  // not squarefree
        pool.push_back(SquareClass::of_rational(f, n));
        pool.push_back(SquareClass::of_rational(f, -n));
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

// complete invariant fingerprint for a 2-fold Pfister form (rank 4)
std::string pair_fingerprint(const FieldDescriptor& f, const SquareClass& a, const SquareClass& b,
                             const std::vector<Place>& places) {
    DiagonalForm q = pfister_form_classes(f, {a, b});
    std::string key;
    switch (f.kind) {
        case FieldKind::AlgClosed:
            return "c";
        case FieldKind::Real: {
            std::int64_t s = 0;
            for (const auto& c : q.entries) s += c.negative() ? -1 : 1;
            return "s" + std::to_string(s);
        }
        case FieldKind::Finite: {
            SquareClass d = SquareClass::one(f);
            for (const auto& c : q.entries) d = d * c;
            return "d" + d.to_string();
        }
        case FieldKind::Padic: {
            SquareClass d = SquareClass::one(f);
            for (const auto& c : q.entries) d = d * c;
            return "d" + d.to_string() + "h" + std::to_string(hasse_invariant(q, Place::prime(f.p)));
        }
        case FieldKind::Rational: {
            SquareClass d = SquareClass::one(f);
            for (const auto& c : q.entries) d = d * c;
            std::int64_t s = 0;
            for (const auto& c : q.entries) s += c.negative() ? -1 : 1;
            key = "d" + d.to_string() + "s" + std::to_string(s);
            for (const auto& v : places) {
                if (v.real) continue;
                key += "|" + std::to_string(hasse_invariant(q, v));
            }
            return key;
        }
    }
    return key;
}

}  // namespace

ChainSearchResult chain_p_equivalent(const PfisterPresentation& A, const PfisterPresentation& B,
                                     const Bounds& bounds) {
    if (!(A.field == B.field)) throw std::invalid_argument("chain search: field mismatch");
    if (A.slots.size() != B.slots.size()) throw std::invalid_argument("chain search: fold mismatch");
    const FieldDescriptor& f = A.field;
    bool bounded = f.kind == FieldKind::Rational;

    ChainSearchResult res;
    if (!gw_equal(A.expand(), B.expand())) {
        res.verdict = ChainVerdict::NoChain;  // moves preserve the GW class
        return res;
    }

    auto pool = chain_pool(f, bounds);
    // group pool pairs by the GW class of their 2-fold Pfister form
    std::vector<Place> places;
    if (f.kind == FieldKind::Rational) {
        std::set<std::int64_t> ps{2};
        for (const auto& c : pool)
            for (auto p : c.primes()) ps.insert(p);
        for (const auto& c : A.slots)
            for (auto p : c.primes()) ps.insert(p);
        places.push_back(Place::real_place());
        for (auto p : ps) places.push_back(Place::prime(p));
    }
    std::map<std::string, std::vector<std::pair<SquareClass, SquareClass>>> pair_classes;
    for (const auto& a : pool)
        for (const auto& b : pool)
            pair_classes[pair_fingerprint(f, a, b, places)].push_back({a, b});

    using State = std::vector<SquareClass>;  // sorted slot multiset
    auto sorted = [](State s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    State src = sorted(A.slots), dst = sorted(B.slots);

    struct Edge {
        State parent;
        ChainLink link;
    };
    std::map<State, Edge> parent;
    std::set<State> seen{src};
    std::deque<State> queue{src};
    res.states_explored = 0;

    auto build_chain = [&](const State& end) {
        std::vector<State> states{end};
        std::vector<ChainLink> links;
        State cur = end;
        while (!(cur == src)) {
            auto& e = parent.at(cur);
            links.push_back(e.link);
            cur = e.parent;
            states.push_back(cur);
        }
        std::reverse(states.begin(), states.end());
        std::reverse(links.begin(), links.end());
        EquivalenceChain chain;
        for (auto& s : states) chain.steps.push_back({f, s});
        chain.links = links;
        return chain;
    };

    if (src == dst) {
        res.verdict = ChainVerdict::Found;
        EquivalenceChain chain;
        chain.steps.push_back({f, src});
        res.chain = chain;
        return res;
    }

    int max_states = bounded ? 20000 : 1 << 20;
    while (!queue.empty() && res.states_explored < max_states) {
        State cur = queue.front();
        queue.pop_front();
        ++res.states_explored;
        int n = static_cast<int>(cur.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto fp = pair_fingerprint(f, cur[i], cur[j], places);
                auto it = pair_classes.find(fp);
                if (it == pair_classes.end()) continue;
                for (const auto& [c, d] : it->second) {
                    State next = cur;
                    next[i] = c;
                    next[j] = d;
                    State key = sorted(next);
                    if (!seen.insert(key).second) continue;
                    ChainLink link{i, j, {cur[i], cur[j]}, {c, d}};
                    parent.emplace(key, Edge{cur, link});
                    if (key == dst) {
                        res.verdict = ChainVerdict::Found;
                        res.chain = build_chain(key);
                        return res;
                    }
                    queue.push_back(key);
                }
            }
        }
    }
    res.verdict = bounded ? ChainVerdict::Inconclusive : ChainVerdict::NoChain;
    return res;
}

// ---------------------------------------------------------------------------
// eta and nu

CohomologyClass eta(const MilnorElement& x) {
    const auto& f = x.field();
    CohomologyClass acc = CohomologyClass::zero(f, x.degree());
    for (const auto& sym : x.symbols()) {
        CohomologyClass term = CohomologyClass::scalar(f);
        for (const auto& c : sym) term = cup_product(term, class_of_unit(f, c.representative()));
        acc = acc + term;
    }
    return acc;
}

namespace {

std::vector<std::int64_t> primes_up_to(int bound) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p <= bound; ++p)
        if (is_prime_i64(p)) ps.push_back(p);
    return ps;
}

// Pfister basis ids of I^n / I^{n+1} for the finite Witt rings, parallel
// to graded_witt's generator labels.
std::vector<int> finite_graded_basis_ids(const WittRing& w, int n) {
    const auto& f = w.field();
    auto classes = square_class_group(f);
    const auto& powers = w.ideal_powers();
    auto span_of = [&](std::set<int> s, int extra) {
        s.insert(extra);
        bool ch = true;
        while (ch) {
            ch = false;
            std::vector<int> e(s.begin(), s.end());
            for (int a : e)
                for (int b : e)
                    if (s.insert(w.add(a, b)).second) ch = true;
        }
        return s;
    };
    std::set<int> span = n + 1 < static_cast<int>(powers.size()) ? powers[n + 1]
                                                                 : std::set<int>{w.zero()};
    int dim = w.graded_dimension(n);
    std::vector<int> out;
    if (n == 0) return {w.one()};
    std::vector<int> idx(n, 0);
    auto next_multiset = [&](std::vector<int>& v, int m) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
            if (v[i] + 1 < m) {
                int val = v[i] + 1;
                for (size_t j = i; j < v.size(); ++j) v[j] = val;
                return true;
            }
        }
        return false;
    };
    do {
        std::vector<SquareClass> slots;
        for (int i : idx) slots.push_back(classes[i]);
        int id = w.class_of(pfister_form_classes(f, slots));
        if (!span.count(id)) {
            out.push_back(id);
            span = span_of(span, id);
            if (static_cast<int>(out.size()) == dim) break;
        }
    } while (next_multiset(idx, static_cast<int>(classes.size())));
    return out;
}

// coordinates of a Witt class id lying in I^n, relative to the Pfister
// basis of I^n / I^{n+1}
std::vector<int> finite_coset_coordinates(const WittRing& w, int n, int id) {
    auto basis = finite_graded_basis_ids(w, n);
    const auto& powers = w.ideal_powers();
    auto in_next = [&](int x) {
        if (n + 1 < static_cast<int>(powers.size())) return powers[n + 1].count(x) > 0;
        return x == w.zero();
    };
    int k = static_cast<int>(basis.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        int acc = id;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) acc = w.add(acc, basis[i]);  // 2-torsion: adding = subtracting
        if (in_next(acc)) {
            std::vector<int> coords(k, 0);
            for (int i = 0; i < k; ++i) coords[i] = (mask >> i) & 1;
            return coords;
        }
    }
    throw std::logic_error("element not in I^n modulo the Pfister basis span");
}

std::int64_t form_signature(const DiagonalForm& q) {
    std::int64_t s = 0;
    for (const auto& c : q.entries) s += c.negative() ? -1 : 1;
    return s;
}

std::vector<Place> q_place_list(const Bounds& bounds) {
    std::vector<Place> places{Place::real_place()};
    for (auto p : primes_up_to(bounds.prime_bound)) places.push_back(Place::prime(p));
    return places;
}

}  // namespace

bool GradedCoordinates::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](int b) { return b == 0; });
}

GradedCoordinates nu(const MilnorElement& x, const Bounds& bounds) {
    const auto& f = x.field();
    int n = x.degree();
    GradedCoordinates out{f, n, {}};
    switch (f.kind) {
        case FieldKind::AlgClosed: {
            out.coords = {0};
            for (const auto& sym : x.symbols())
                if (n == 0) out.coords[0] ^= 1;
            break;
        }
        case FieldKind::Real: {
            out.coords = {0};
            for (const auto& sym : x.symbols()) {
                DiagonalForm q = pfister_form_classes(f, sym);
                out.coords[0] ^= static_cast<int>((form_signature(q) >> n) & 1);
            }
            break;
        }
        case FieldKind::Finite:
        case FieldKind::Padic: {
            if (f.kind == FieldKind::Padic && f.p == 2)
                throw std::invalid_argument("nu: Witt tables over Q_2 are unsupported");
            const WittRing& w = WittRing::of(f);
            int dim = w.graded_dimension(n);
            out.coords.assign(dim, 0);
            for (const auto& sym : x.symbols()) {
                int id = w.class_of(pfister_form_classes(f, sym));
                auto c = finite_coset_coordinates(w, n, id);
                for (int i = 0; i < dim; ++i) out.coords[i] ^= c[i];
            }
            break;
        }
        case FieldKind::Rational: {
            auto places = q_place_list(bounds);
            if (n == 0) {
                out.coords = {0};
                for (const auto& sym : x.symbols()) {
                    (void)sym;
                    out.coords[0] ^= 1;
                }
            } else if (n == 1) {
                // disc coordinates: sign, then v_p parity for p <= bound
                out.coords.assign(places.size(), 0);
                for (const auto& sym : x.symbols()) {
                    DiagonalForm q = pfister_form_classes(f, sym);
                    SquareClass disc = SquareClass::one(f);
                    for (const auto& c : q.entries) disc = disc * c;
                    disc = disc * SquareClass::of_rational(f, -1);  // signed disc, rank 2
                    if (disc.negative()) out.coords[0] ^= 1;
                    for (size_t i = 1; i < places.size(); ++i) {
                        auto ps = disc.primes();
                        if (std::find(ps.begin(), ps.end(), places[i].p) != ps.end())
                            out.coords[i] ^= 1;
                    }
                }
            } else if (n == 2) {
                // Witt/Clifford invariant bits placewise
                out.coords.assign(places.size(), 0);
                for (const auto& sym : x.symbols()) {
                    DiagonalForm q = pfister_form_classes(f, sym);
                    for (size_t i = 0; i < places.size(); ++i)
                        if (witt_invariant(q, places[i]) == -1) out.coords[i] ^= 1;
                }
            } else {
                out.coords = {0};
                for (const auto& sym : x.symbols()) {
                    DiagonalForm q = pfister_form_classes(f, sym);
                    out.coords[0] ^= static_cast<int>((form_signature(q) >> n) & 1);
                }
            }
            break;
        }
    }
    return out;
}

std::vector<int> eta_coordinates(const CohomologyClass& c, const Bounds& bounds) {
    const auto& f = c.field();
    int n = c.degree();
    switch (f.kind) {
        case FieldKind::AlgClosed:
        case FieldKind::Real:
            return {c.is_zero() ? 0 : 1};
        case FieldKind::Finite:
            return {c.is_zero() ? 0 : 1};
        case FieldKind::Padic: {
            if (n == 0 || n == 2) return {c.bit()};
            if (n >= 3) return {};
            // degree 1: class coordinates
            if (f.p != 2) {
                SquareClass g = SquareClass::of_rational(f, least_nonresidue(f.p));
                SquareClass pc = SquareClass::of_rational(f, f.p);
                // solve class = g^a * p^b over the Klein group
                for (int a = 0; a <= 1; ++a)
                    for (int b = 0; b <= 1; ++b) {
                        SquareClass t = SquareClass::one(f);
                        if (a) t = t * g;
                        if (b) t = t * pc;
                        if (t == c.unit_class()) return {a, b};
                    }
                throw std::logic_error("class outside the Q_p square class group");
            }
            for (int a = 0; a <= 1; ++a)
                for (int b = 0; b <= 1; ++b)
                    for (int d = 0; d <= 1; ++d) {
                        SquareClass t = SquareClass::one(f);
                        if (a) t = t * SquareClass::of_rational(f, -1);
                        if (b) t = t * SquareClass::of_rational(f, 5);
                        if (d) t = t * SquareClass::of_rational(f, 2);
                        if (t == c.unit_class()) return {a, b, d};
                    }
            throw std::logic_error("class outside the Q_2 square class group");
        }
        case FieldKind::Rational: {
            auto places = q_place_list(bounds);
            if (n == 0) return {c.bit()};
            if (n == 1) {
                std::vector<int> coords(places.size(), 0);
                coords[0] = c.unit_class().negative() ? 1 : 0;
                auto ps = c.unit_class().primes();
                for (size_t i = 1; i < places.size(); ++i)
                    coords[i] = std::find(ps.begin(), ps.end(), places[i].p) != ps.end() ? 1 : 0;
                return coords;
            }
            if (n == 2) {
                std::vector<int> coords(places.size(), 0);
                for (size_t i = 0; i < places.size(); ++i)
                    coords[i] = c.local_support().count(places[i]) ? 1 : 0;
                return coords;
            }
            return {c.bit()};
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// verifiers

namespace {

int gf2_rank(std::vector<std::vector<int>> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols; ++c) {
        int pivot = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c]) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (static_cast<int>(r) != rank && rows[r][c])
                for (size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
        if (rank == static_cast<int>(rows.size())) break;
    }
    return rank;
}

}  // namespace

VerificationReport verify_eta(const FieldDescriptor& f, int n_max, const Bounds& bounds) {
    VerificationReport rep;
    rep.map_name = "eta";
    rep.field = f;
    rep.max_degree = n_max;
    bool all_iso = true;
    for (int n = 0; n <= n_max; ++n) {
        auto basis = k_group_basis(f, n, bounds);
        auto target = cohomology_structure(f, n, bounds);
        std::vector<std::vector<int>> images;
        for (const auto& x : basis) {
            auto img = eta_coordinates(eta(x), bounds);
            img.resize(std::max<size_t>(img.size(), 1), 0);
            images.push_back(img);
            rep.witnesses.push_back("deg " + std::to_string(n) + ": eta(" + x.to_string() +
                                    ") = " + eta(x).to_string());
        }
        DegreeCheck chk;
        chk.degree = n;
        chk.domain_dim = static_cast<int>(basis.size());
        chk.codomain_dim = target.dimension;
        chk.image_rank = gf2_rank(images);
        chk.injective = chk.image_rank == chk.domain_dim;
        chk.surjective = chk.image_rank == chk.codomain_dim;
        if (!chk.injective || !chk.surjective) {
            all_iso = false;
            rep.failures.push_back("degree " + std::to_string(n) + ": rank " +
                                   std::to_string(chk.image_rank) + " vs dims " +
                                   std::to_string(chk.domain_dim) + "/" +
                                   std::to_string(chk.codomain_dim));
        }
        rep.degrees.push_back(chk);
    }
    rep.verdict = all_iso ? "iso" : "fail";
    return rep;
}

VerificationReport verify_nu(const FieldDescriptor& f, int n_max, const Bounds& bounds) {
    VerificationReport rep;
    rep.map_name = "nu";
    rep.field = f;
    rep.max_degree = n_max;
    bool all_iso = true;
    for (int n = 0; n <= n_max; ++n) {
        auto basis = k_group_basis(f, n, bounds);
        auto target = graded_witt(f, n, bounds);
        std::vector<std::vector<int>> images;
        for (const auto& x : basis) {
            auto img = nu(x, bounds);
            img.coords.resize(std::max<size_t>(img.coords.size(), 1), 0);
            images.push_back(img.coords);
        }
        DegreeCheck chk;
        chk.degree = n;
        chk.domain_dim = static_cast<int>(basis.size());
        chk.codomain_dim = target.dimension;
        chk.image_rank = gf2_rank(images);
        chk.injective = chk.image_rank == chk.domain_dim;
        chk.surjective = chk.image_rank == chk.codomain_dim;
        if (!chk.injective || !chk.surjective) {
            all_iso = false;
            rep.failures.push_back("degree " + std::to_string(n) + ": rank " +
                                   std::to_string(chk.image_rank) + " vs dims " +
                                   std::to_string(chk.domain_dim) + "/" +
                                   std::to_string(chk.codomain_dim));
        }
        rep.degrees.push_back(chk);
    }
    rep.verdict = all_iso ? "iso" : "fail";
    return rep;
}

VerificationReport verify_elman_lam(const FieldDescriptor& f, int n) {
    if (!(f.kind == FieldKind::Finite || (f.kind == FieldKind::Padic && f.p != 2)))
        throw std::invalid_argument("verify_elman_lam: field must be F_q or Q_p (odd p)");
    if (n != 2 && n != 3) throw std::invalid_argument("verify_elman_lam: n must be 2 or 3");

    VerificationReport rep;
    rep.map_name = "elman-lam";
    rep.field = f;
    rep.max_degree = n;
    const WittRing& w = WittRing::of(f);
    auto classes = square_class_group(f);

    // all ordered n-tuples of square classes
    std::vector<std::vector<SquareClass>> tuples;
    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<SquareClass> t;
        for (int i : idx) t.push_back(classes[i]);
        tuples.push_back(t);
        int pos = n - 1;
        while (pos >= 0 && idx[pos] + 1 == static_cast<int>(classes.size())) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }

    const auto& powers = w.ideal_powers();
    auto in_power = [&](int lvl, int id) {
        if (lvl < static_cast<int>(powers.size())) return powers[lvl].count(id) > 0;
        return id == w.zero();
    };

    int pairs = 0, agreements = 0;
    for (const auto& ta : tuples) {
        for (const auto& tb : tuples) {
            ++pairs;
            PfisterPresentation A{f, ta}, B{f, tb};
            bool cond_a = chain_p_equivalent(A, B).verdict == ChainVerdict::Found;
            bool cond_b = MilnorElement::of_classes(f, ta) == MilnorElement::of_classes(f, tb);
            int diff = w.add(w.class_of(A.expand()), w.neg(w.class_of(B.expand())));
            bool cond_c = in_power(n + 1, diff);
            bool cond_d = gw_equal(A.expand(), B.expand());
            if (cond_a == cond_b && cond_b == cond_c && cond_c == cond_d) {
                ++agreements;
            } else {
                rep.failures.push_back(A.to_string() + " vs " + B.to_string() + ": (a)=" +
                                       std::to_string(cond_a) + " (b)=" + std::to_string(cond_b) +
                                       " (c)=" + std::to_string(cond_c) + " (d)=" +
                                       std::to_string(cond_d));
            }
        }
    }
    DegreeCheck chk;
    chk.degree = n;
    chk.domain_dim = static_cast<int>(tuples.size());
    chk.codomain_dim = pairs;
    chk.image_rank = agreements;
    chk.injective = chk.surjective = rep.failures.empty();
    rep.degrees.push_back(chk);
    rep.witnesses.push_back(std::to_string(tuples.size()) + " presentations, " +
                            std::to_string(pairs) + " pairs, " + std::to_string(agreements) +
                            " agreements");
    rep.verdict = rep.failures.empty() ? "iso" : "fail";
    return rep;
}

VerificationReport pure_symbol_injectivity_check(const FieldDescriptor& f) {
    if (f.kind == FieldKind::Rational)
        throw std::invalid_argument("pure_symbol_injectivity_check needs finite square classes");
    VerificationReport rep;
    rep.map_name = "pure-injectivity";
    rep.field = f;
    rep.max_degree = 3;
    auto classes = square_class_group(f);
    for (int n = 1; n <= 3; ++n) {
        if (f.kind == FieldKind::Padic && f.p == 2) break;  // no Witt table over Q_2
        std::vector<std::vector<SquareClass>> tuples;
        std::vector<int> idx(n, 0);
        while (true) {
            std::vector<SquareClass> t;
            for (int i : idx) t.push_back(classes[i]);
            tuples.push_back(t);
            int pos = n - 1;
            while (pos >= 0 && idx[pos] + 1 == static_cast<int>(classes.size())) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[pos];
        }
        int checked = 0;
        for (const auto& ta : tuples)
            for (const auto& tb : tuples) {
                MilnorElement xa = MilnorElement::of_classes(f, ta);
                MilnorElement xb = MilnorElement::of_classes(f, tb);
                if (nu(xa) == nu(xb) && !(xa == xb))
                    rep.failures.push_back("nu collision in degree " + std::to_string(n) + ": " +
                                           xa.to_string() + " vs " + xb.to_string());
                ++checked;
            }
        DegreeCheck chk;
        chk.degree = n;
        chk.domain_dim = static_cast<int>(tuples.size());
        chk.codomain_dim = checked;
        chk.injective = chk.surjective = rep.failures.empty();
        rep.degrees.push_back(chk);
    }
    rep.verdict = rep.failures.empty() ? "iso" : "fail";
    return rep;
}

}  // namespace mwb
