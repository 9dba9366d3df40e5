#pragma once

// Diagonal quadratic forms, the Grothendieck-Witt and Witt rings with the
// two-term relations <ab^2> = <a> and <a,b> = <a+b, ab(a+b)>, the classical
// invariants e0/e1/e2, Witt decomposition, Pfister and norm-quadric forms,
// and the I-adic filtration.

#include "milnorwb/config.hpp"
#include "milnorwb/fields.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mwb {

struct DiagonalForm {
    FieldDescriptor field;
    std::vector<SquareClass> entries;  // canonical square classes, every entry nonzero

    static DiagonalForm of_elements(const FieldDescriptor& f, const std::vector<FieldElement>& diag);
    static DiagonalForm of_classes(const FieldDescriptor& f, std::vector<SquareClass> cs);
    // Form literal grammar: <a1>,<a2>,... with elements per field grammar.
    static DiagonalForm parse(const FieldDescriptor& f, const std::string& text);

    int rank() const { return static_cast<int>(entries.size()); }
    DiagonalForm concat(const DiagonalForm& rhs) const;
    std::string to_string() const;
};

// Virtual form: finite mapping square class -> integer multiplicity.
class GWElement {
  public:
    GWElement() = default;
    explicit GWElement(FieldDescriptor f) : field_(std::move(f)) {}

    static GWElement zero(const FieldDescriptor& f) { return GWElement(f); }
    static GWElement of_form(const DiagonalForm& f);
    static GWElement of_class(const SquareClass& c, std::int64_t mult = 1);

    const FieldDescriptor& field() const { return field_; }
    const std::map<SquareClass, std::int64_t>& terms() const { return terms_; }
    bool structurally_zero() const { return terms_.empty(); }

    std::int64_t rank() const;  // dimension homomorphism: sum of multiplicities
    GWElement operator+(const GWElement& rhs) const;
    GWElement operator-() const;
    GWElement operator-(const GWElement& rhs) const;
    GWElement operator*(const GWElement& rhs) const;
    GWElement scale(std::int64_t n) const;

    DiagonalForm positive_part() const;
    DiagonalForm negative_part() const;  // entries with multiplicity < 0, as a positive form

    std::string to_string() const;

  private:
    FieldDescriptor field_;
    std::map<SquareClass, std::int64_t> terms_;
    void add_term(const SquareClass& c, std::int64_t m);
};

// True iff x = y in GW(F), decided by the complete invariant set of the
// field: rank (C); rank+signature (R); rank+det (F_q); rank+det+Hasse
// (Q_p); rank+signature+det+all local Hasse bits (Q, Hasse-Minkowski).
bool gw_equal(const GWElement& x, const GWElement& y);
bool gw_equal(const DiagonalForm& x, const DiagonalForm& y);

struct InvariantRecord {
    int rank = 0;
    int e0 = 0;  // rank mod 2
    SquareClass disc;
    std::optional<std::int64_t> signature;  // real places only (R, Q)
    std::map<Place, int> hasse;             // Hasse invariant prod_{i<j} (a_i,a_j)_v
    std::map<Place, int> witt;              // Clifford/Witt invariant (dimension-dependent twist)
};

InvariantRecord classical_invariants(const DiagonalForm& f);

int hasse_invariant(const DiagonalForm& f, const Place& v);
// The Clifford (Witt) invariant: Hasse twisted by disc and (-1,-1) factors
// according to rank mod 8; well defined on I^2/I^3 and additive there.
int witt_invariant(const DiagonalForm& f, const Place& v);

// Exact isotropy decision per field (rank/det/Hasse criteria; local-global
// over Q).
bool is_isotropic(const DiagonalForm& f);

struct WittDecomposition {
    DiagonalForm anisotropic;
    std::int64_t hyperbolic_count = 0;
};

// f is GW-equal to anisotropic + count * <1,-1>; the anisotropic part
// admits no further splitting.
WittDecomposition witt_decompose(const DiagonalForm& f);

// <1,-b1> x ... x <1,-bn>, entries ordered by subset bitmask: (b1,b2) ->
// <1, -b1, -b2, b1 b2>.
DiagonalForm pfister_form(const FieldDescriptor& f, const std::vector<FieldElement>& slots);
DiagonalForm pfister_form_classes(const FieldDescriptor& f, const std::vector<SquareClass>& slots);

// pfister(a1..a_{n-1}) followed by -a_n; dimension 2^{n-1} + 1, n >= 2.
DiagonalForm norm_quadric_form(const FieldDescriptor& f, const std::vector<FieldElement>& slots);

// Symmetric Gram matrix -> GW-equal diagonal form (congruence
// diagonalization; char != 2).
DiagonalForm diagonalize_gram(const FieldDescriptor& f,
                              const std::vector<std::vector<FieldElement>>& gram);

// ---------------------------------------------------------------------------
// Finite Witt rings (F_q and Q_p, p odd), computed by closing the
// generator set {<u>} under sum/product with Witt-class identification.

class WittRing {
  public:
    const FieldDescriptor& field() const { return field_; }
    int size() const { return static_cast<int>(reps_.size()); }
    int zero() const { return zero_; }
    int one() const { return one_; }
    const DiagonalForm& rep(int id) const { return reps_[id]; }
    int add(int a, int b) const { return add_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    bool even_rank(int a) const { return even_[a]; }

    int class_of(const GWElement& x) const;
    int class_of(const DiagonalForm& f) const;

    // I^0 = W, I^1 = even-rank classes, I^{n+1} = additive closure of
    // I^n * I; the chain stabilizes at {0}.
    const std::vector<std::set<int>>& ideal_powers() const { return ideal_powers_; }
    int graded_dimension(int n) const;  // log2 |I^n / I^{n+1}|

    int element_order(int a) const;  // additive order

    static const WittRing& of(const FieldDescriptor& f);  // cached, write-once

  private:
    friend WittRing build_witt_ring(const FieldDescriptor& f);
    FieldDescriptor field_;
    std::vector<DiagonalForm> reps_;  // anisotropic representative per class
    std::map<std::string, int> key_to_id_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_;
    std::vector<char> even_;
    std::vector<std::set<int>> ideal_powers_;
    int zero_ = 0, one_ = 0;
};

struct CyclicFactor {
    std::int64_t order = 0;  // 0 denotes a free Z factor
    std::string generator;
};

struct FiniteRingPresentation {
    FieldDescriptor field;
    std::string ring;                    // "W" or "GW"
    std::vector<CyclicFactor> additive;  // additive group as a product of cyclic groups
    std::string additive_type;           // e.g. "Z/4", "Z/2 + Z/2", "Z + Z/2"
    std::vector<std::string> elements;   // element labels, index = id (W only)
    std::vector<std::vector<int>> add_table;
    std::vector<std::vector<int>> mul_table;
    std::vector<std::string> ideal_generators;  // distinguished generators for I
};

// Witt ring table for F_q / Q_p (p odd); throws for infinite Witt rings.
FiniteRingPresentation witt_ring_table(const FieldDescriptor& f);

// GW(F) additive presentation via Smith normal form over the rank-2
// relation set (complete by the chain theorem).  Finite square-class
// fields only.
FiniteRingPresentation gw_table(const FieldDescriptor& f);

struct GradedWittPiece {
    FieldDescriptor field;
    int degree = 0;
    int dimension = 0;
    std::vector<std::string> generators;  // Pfister class labels
    std::string model;                    // "table", "closed-form", or "derived-model"
    int prime_bound = 0;                  // Q only: primes <= bound in the local part
};

GradedWittPiece graded_witt(const FieldDescriptor& f, int degree, const Bounds& bounds = load_bounds());

// Eq.-(1.1) rewrite chain search between GW-equal diagonal forms over Q:
// bidirectional BFS over two-entry moves <a,b> -> <a+b, ab(a+b)> with all
// square classes kept below the height bound.  nullopt = no chain within
// bounds (inconclusive for unequal heights, impossible if gw_equal fails).
std::optional<std::vector<DiagonalForm>> gw_rewrite_chain(const DiagonalForm& from,
                                                          const DiagonalForm& to, int height,
                                                          int max_states = 200000);

}  // namespace mwb
