#pragma once

// Supported coefficient fields, exact element arithmetic, square-class
// normal forms, and the local symbols (Legendre, Hilbert) that power all
// the quadratic-form invariants.
//
// Elements of Q_p are represented by nonzero rationals: Q is dense in Q_p
// and every computation here factors through square classes and
// valuations, so no p-adic precision management is needed.

#include "milnorwb/numeric.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mwb {

enum class FieldKind { AlgClosed, Real, Finite, Padic, Rational };

struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    std::int64_t q = 0;  // Finite: odd prime power >= 3
    std::int64_t p = 0;  // Finite: char; Padic: the prime (2 allowed)
    int ext_degree = 1;  // Finite: q = p^ext_degree

    static FieldDescriptor alg_closed();
    static FieldDescriptor real();
    static FieldDescriptor rationals();
    static FieldDescriptor finite(std::int64_t q);
    static FieldDescriptor padic(std::int64_t p);

    bool operator==(const FieldDescriptor&) const = default;
    std::string to_string() const;
};

// Grammar (bit-exact): C | R | Q | Fq:<q> | Qp:<p>
FieldDescriptor parse_field(const std::string& spec);

// Fixed generator conventions, deterministic functions of the descriptor:
//   finite fields   - least primitive root (least primitive element in the
//                     coordinate enumeration order for proper prime powers);
//   Q_p, p odd      - least quadratic nonresidue mod p.
std::int64_t least_primitive_root(std::int64_t p);
std::int64_t least_nonresidue(std::int64_t p);

// A nonzero element of a supported field.  AlgClosed/Real/Padic/Rational
// carry an exact rational; Finite carries polynomial-basis coordinates
// (low degree first) over F_p modulo a fixed irreducible polynomial.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldDescriptor f, Rational value);
    FieldElement(FieldDescriptor f, std::vector<std::int64_t> coords);

    static FieldElement one(const FieldDescriptor& f);
    static FieldElement from_integer(const FieldDescriptor& f, std::int64_t n);
    // Element grammar: decimal integer, <num>/<den> fraction, or
    // [c0,c1,...] polynomial coordinates for proper prime powers.
    static FieldElement parse(const FieldDescriptor& f, const std::string& text);

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement negate() const;
    FieldElement inverse() const;
    FieldElement one_minus() const;  // 1 - a, used by the Steinberg relation
    bool operator==(const FieldElement& rhs) const;

    const Rational& rational() const;
    const std::vector<std::int64_t>& coords() const;

    std::string to_string() const;

  private:
    FieldDescriptor field_;
    Rational rat_ = 0;
    std::vector<std::int64_t> coords_;
};

// Canonical representative of F*/(F*)^2.
//   AlgClosed:    {1}
//   Real:         {+1, -1}
//   Finite:       {1, g}, g the fixed primitive root
//   Padic p odd:  {1, g, p, gp}, g the least nonresidue mod p
//   Padic 2:      {+-1, +-2, +-5, +-10}
//   Rational:     signed squarefree integer, stored factored
class SquareClass {
  public:
    SquareClass() = default;

    static SquareClass one(const FieldDescriptor& f);
    static SquareClass of(const FieldElement& a);
    static SquareClass of_rational(const FieldDescriptor& f, const Rational& a);

    const FieldDescriptor& field() const { return field_; }

    SquareClass operator*(const SquareClass& rhs) const;
    SquareClass inverse() const { return *this; }  // every class is 2-torsion
    bool is_one() const;
    bool operator==(const SquareClass&) const = default;
    std::strong_ordering operator<=>(const SquareClass&) const = default;

    // A field element representing the class.
    FieldElement representative() const;
    // For Q/R/Qp classes: the canonical signed squarefree integer.
    BigInt canonical_integer() const;

    bool negative() const;                          // Real/Rational: sign bit
    const std::vector<std::int64_t>& primes() const { return primes_; }

    std::string to_string() const;

  private:
    FieldDescriptor field_;
    // Encoding by kind:
    //   Real:      sign_
    //   Finite:    nonsquare_
    //   Padic p>2: nonsquare_ (unit part), val_odd_
    //   Padic 2:   unit_mod8_ in {1,3,5,7}, val_odd_
    //   Rational:  sign_, primes_ (sorted, distinct)
    bool sign_ = false;
    bool nonsquare_ = false;
    bool val_odd_ = false;
    int unit_mod8_ = 1;
    std::vector<std::int64_t> primes_;
};

// Complete duplicate-free enumeration, closed under products.  Throws for
// the rationals (infinite group).
std::vector<SquareClass> square_class_group(const FieldDescriptor& f);

// +1 iff a is a nonzero square mod p, 0 iff p | a; computed as
// a^((p-1)/2) mod p.
int legendre_symbol(const BigInt& a, std::int64_t p);

// A place of Q: the real place or a prime (2 allowed).
struct Place {
    bool real = false;
    std::int64_t p = 0;

    static Place real_place() { return {true, 0}; }
    static Place prime(std::int64_t p) { return {false, p}; }
    bool operator==(const Place&) const = default;
    auto operator<=>(const Place&) const = default;
    std::string to_string() const;
};

// Hilbert symbol (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2 has a
// nonzero solution over the completion at v.  Standard valuation/residue
// formula for odd p, the eps/omega formula at p = 2, sign inspection
// over R.
int hilbert_symbol(const Place& v, const Rational& a, const Rational& b);

// Overload taking a place as a field descriptor (RealModel or PadicField).
int hilbert_symbol(const FieldDescriptor& place, const FieldElement& a, const FieldElement& b);

// The finitely many places where (a,b)_v could be -1: the real place, 2,
// and odd primes dividing numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

}  // namespace mwb
