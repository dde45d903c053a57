#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsalg/algebra.hpp"

namespace rsalg {

// Linear subspace of an algebra with a canonical (reduced-echelon) basis.
struct Subspace {
    AlgebraPtr algebra;
    std::vector<Element> basis;

    std::size_t dim() const { return basis.size(); }
    bool contains(const Element& v) const;
};

// canonical subspace spanned by the given vectors
Subspace span_of(const AlgebraPtr& alg, const std::vector<Element>& vectors);

// same algebra with Poly coefficients embedded into their fraction
// field; field-coefficient algebras are returned unchanged
AlgebraPtr lift_to_field(const AlgebraPtr& alg);

// { z : (z,x,y) = (x,z,y) = (x,y,z) = [x,z] = 0 for all x,y }
Subspace compute_center(const AlgebraPtr& alg);

// center intersected with the even part; graded algebras only
Subspace compute_even_center(const AlgebraPtr& alg);

// unique two-sided unit, when one exists
std::optional<Element> find_unit(const AlgebraPtr& alg);

struct SimplicityVerdict {
    bool simple = false;
    bool graded = false;
    std::size_t ambient_dim = 0;
    std::vector<std::string> generators_tested;
    // set when not simple: the generator whose ideal closure is proper
    std::optional<std::string> witness_generator;
    std::size_t witness_closure_dim = 0;
    std::vector<Element> witness_closure_basis;
};

// ideal closure from every basis vector plus one dense element; graded
// mode also closes under parity projections
SimplicityVerdict check_simple(const AlgebraPtr& alg, bool graded);

} // namespace rsalg
