#pragma once

// Structural models of H*(F; Z/2) for the supported fields, the degree-1
// identification with square classes, and cup products.
//
// The models hardcode the Appendix-level structure theory (Tate's
// local-global results over Q, H^i(Q_p) = 0 for i >= 3, Z/2[a] over R)
// rather than computing profinite cohomology from cocycles.

#include "milnorwb/config.hpp"
#include "milnorwb/fields.hpp"

#include <set>
#include <string>
#include <vector>

namespace mwb {

// Model data by field and degree:
//   F_q:  one bit in degrees 0,1; zero above
//   R:    one bit per degree (powers of the generator a)
//   Q_p:  degree 1 square class, degree 2 bit, zero above
//   Q:    degree 1 square class, degree 2 even place set, degree >= 3 bit
//   C:    degree 0 bit only
class CohomologyClass {
  public:
    CohomologyClass() = default;

    static CohomologyClass zero(const FieldDescriptor& f, int degree);
    static CohomologyClass scalar(const FieldDescriptor& f);  // the unit in degree 0

    const FieldDescriptor& field() const { return field_; }
    int degree() const { return degree_; }
    bool is_zero() const;

    CohomologyClass operator+(const CohomologyClass& rhs) const;
    bool operator==(const CohomologyClass& rhs) const;

    int bit() const { return bit_; }
    const SquareClass& unit_class() const { return class_; }
    const std::set<Place>& local_support() const { return places_; }

    std::string to_string() const;

  private:
    FieldDescriptor field_;
    int degree_ = 0;
    int bit_ = 0;
    SquareClass class_;
    std::set<Place> places_;

    friend CohomologyClass class_of_unit(const FieldDescriptor&, const FieldElement&);
    friend CohomologyClass cup_product(const CohomologyClass&, const CohomologyClass&);
    friend CohomologyClass cohomology_from_parts(const FieldDescriptor&, int, int,
                                                 const SquareClass&, const std::set<Place>&);
};

struct CohomologyStructure {
    FieldDescriptor field;
    int degree = 0;
    int dimension = 0;
    std::vector<std::string> basis;
    int prime_bound = 0;  // Q only
};

CohomologyStructure cohomology_structure(const FieldDescriptor& f, int degree,
                                         const Bounds& bounds = load_bounds());

// H^1(F;Z/2) = F*/(F*)^2: the degree-1 class of square_class(a).
CohomologyClass class_of_unit(const FieldDescriptor& f, const FieldElement& a);

// Bilinear, commutative mod 2.  Degree-1 x degree-1 over Q_p/R is the
// Hilbert symbol bit, over Q it is placewise, over R polynomial
// multiplication in Z/2[a]; zero whenever the target group vanishes.
CohomologyClass cup_product(const CohomologyClass& x, const CohomologyClass& y);

// Internal assembler, used by the eta map.
CohomologyClass cohomology_from_parts(const FieldDescriptor& f, int degree, int bit,
                                      const SquareClass& cls, const std::set<Place>& places);

}  // namespace mwb
