#pragma once

// Mod-2 Milnor K-theory: pure symbols, Steinberg normal forms per supported
// field, tame symbols for Q, and K-group structure reports.
//
// A symbol {a1,...,an} depends only on the square classes of its slots
// ({ab^2, c} = {a, c} mod 2), so slots are canonicalized on construction.

#include "milnorwb/config.hpp"
#include "milnorwb/fields.hpp"

#include <set>
#include <string>
#include <vector>

namespace mwb {

struct PureSymbol {
    FieldDescriptor field;
    std::vector<FieldElement> slots;  // all nonzero

    static PureSymbol of(const FieldDescriptor& f, const std::vector<FieldElement>& slots);
    int degree() const { return static_cast<int>(slots.size()); }
    std::string to_string() const;
};

// GF(2)-formal sum of pure symbols together with its canonical per-field
// normal form:
//   C:    zero in degree >= 1
//   R:    one bit, the coefficient of {-1,...,-1}
//   F_q:  one bit in degrees 0..1, zero above
//   Q_p:  degree 1 square class, degree 2 Hilbert bit, zero above
//   Q:    degree 1 square class, degree 2 set of places with nontrivial
//         local symbol (even cardinality), degree >= 3 the real-place bit
class MilnorElement {
  public:
    MilnorElement() = default;

    static MilnorElement zero(const FieldDescriptor& f, int degree);
    static MilnorElement of_symbol(const PureSymbol& s);
    static MilnorElement of_classes(const FieldDescriptor& f, const std::vector<SquareClass>& slots);
    static MilnorElement sum_of(const FieldDescriptor& f, int degree,
                                const std::vector<PureSymbol>& symbols);
    // Symbol literal grammar: {a1,...,an} with elements per field grammar;
    // sums joined by '+'.
    static MilnorElement parse(const FieldDescriptor& f, const std::string& text);

    const FieldDescriptor& field() const { return field_; }
    int degree() const { return degree_; }

    MilnorElement operator+(const MilnorElement& rhs) const;
    MilnorElement product(const MilnorElement& rhs) const;

    bool is_zero() const;
    bool operator==(const MilnorElement& rhs) const;

    // reduced symbol list (slot-class tuples, mod 2)
    const std::vector<std::vector<SquareClass>>& symbols() const { return symbols_; }

    // canonical data accessors (valid per field/degree as described above)
    int bit() const { return bit_; }
    const SquareClass& unit_class() const { return class_; }
    const std::set<Place>& local_support() const { return places_; }

    std::string to_string() const;

  private:
    FieldDescriptor field_;
    int degree_ = 0;
    std::vector<std::vector<SquareClass>> symbols_;
    int bit_ = 0;
    SquareClass class_;
    std::set<Place> places_;
    void recompute_canonical();
};

// Canonical basis expansion (the element itself; provided as the named
// operation so callers can normalize parses).
MilnorElement symbol_normalize(const MilnorElement& x);

bool symbol_is_zero(const MilnorElement& x);

// Residue map for degree-2 symbols over Q at an odd prime:
// class of (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} mod p.
MilnorElement tame_symbol(std::int64_t p, const PureSymbol& x);
MilnorElement tame_symbol(std::int64_t p, const MilnorElement& x);

struct KGroupStructure {
    FieldDescriptor field;
    int degree = 0;
    int dimension = 0;
    std::vector<std::string> generators;
    int prime_bound = 0;  // Q only
};

KGroupStructure k_group(const FieldDescriptor& f, int degree, const Bounds& bounds = load_bounds());

// Basis of K_n(F)/2 as explicit symbols, matching k_group's dimensions
// (bounded model over Q).
std::vector<MilnorElement> k_group_basis(const FieldDescriptor& f, int degree,
                                         const Bounds& bounds = load_bounds());

}  // namespace mwb
