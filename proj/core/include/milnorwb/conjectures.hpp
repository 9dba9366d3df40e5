#pragma once

// The two Milnor maps eta and nu, degreewise isomorphism verifiers, and
// chain-p-equivalence machinery with the Elman-Lam equivalences checked
// exhaustively over small fields.

#include "milnorwb/galois.hpp"
#include "milnorwb/milnor.hpp"
#include "milnorwb/quadform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwb {

struct PfisterPresentation {
    FieldDescriptor field;
    std::vector<SquareClass> slots;

    DiagonalForm expand() const { return pfister_form_classes(field, slots); }
    std::string to_string() const;
    bool operator==(const PfisterPresentation&) const = default;
};

struct ChainLink {
    int i = 0, j = 0;                    // slot indices changed by this move
    std::vector<SquareClass> old_pair;   // (a_i, a_j)
    std::vector<SquareClass> new_pair;   // (b_i, b_j), <<old>> = <<new>> in GW
};

struct EquivalenceChain {
    std::vector<PfisterPresentation> steps;  // steps.front() = A, steps.back() = B
    std::vector<ChainLink> links;            // links[k] connects steps[k] -> steps[k+1]
};

// every link re-verified by gw_equal on the 2-fold subforms
bool verify_chain(const EquivalenceChain& chain);

enum class ChainVerdict { Found, NoChain, Inconclusive };

struct ChainSearchResult {
    ChainVerdict verdict = ChainVerdict::NoChain;
    std::optional<EquivalenceChain> chain;
    int states_explored = 0;
};

// BFS over the finite graph of slot tuples under simple-p-equivalence
// moves.  Over Q the search pool is height-bounded and the result may be
// inconclusive.
ChainSearchResult chain_p_equivalent(const PfisterPresentation& A, const PfisterPresentation& B,
                                     const Bounds& bounds = load_bounds());

// norm residue map: degree-1 generators by class_of_unit, products by
// cup_product.
CohomologyClass eta(const MilnorElement& x);

// nu({a1,...,an}) = class of <1,-a1>...<1,-an> in I^n/I^{n+1}, presented as
// GF(2) coordinates over the deterministic basis reported by graded_witt.
struct GradedCoordinates {
    FieldDescriptor field;
    int degree = 0;
    std::vector<int> coords;
    bool is_zero() const;
    bool operator==(const GradedCoordinates&) const = default;
};

GradedCoordinates nu(const MilnorElement& x, const Bounds& bounds = load_bounds());

// Coordinates of a cohomology class in the basis of cohomology_structure.
std::vector<int> eta_coordinates(const CohomologyClass& c, const Bounds& bounds = load_bounds());

struct DegreeCheck {
    int degree = 0;
    int domain_dim = 0;
    int codomain_dim = 0;
    int image_rank = 0;
    bool injective = false;
    bool surjective = false;
};

struct VerificationReport {
    std::string map_name;
    FieldDescriptor field;
    int max_degree = 0;
    std::vector<DegreeCheck> degrees;
    std::string verdict;  // "iso", "fail", or "inconclusive"
    std::vector<std::string> witnesses;
    std::vector<std::string> failures;
};

VerificationReport verify_eta(const FieldDescriptor& f, int n_max,
                              const Bounds& bounds = load_bounds());
VerificationReport verify_nu(const FieldDescriptor& f, int n_max,
                             const Bounds& bounds = load_bounds());

// Exhaustive agreement of the four Elman-Lam conditions on n-fold Pfister
// presentations: (a) chain-p-equivalent, (b) equal slot symbols in K^M/2,
// (c) congruent mod I^{n+1}, (d) equal in GW.  F_q and Q_p (odd), n in
// {2,3}.
VerificationReport verify_elman_lam(const FieldDescriptor& f, int n);

// For all pure-symbol pairs of degree <= 3: nu(A) = nu(B) implies A = B.
VerificationReport pure_symbol_injectivity_check(const FieldDescriptor& f);

}  // namespace mwb
