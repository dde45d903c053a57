#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsalg/algebra.hpp"

namespace rsalg {

// parenthesization of the identity's arguments
struct ArgTree {
    using Ptr = std::shared_ptr<const ArgTree>;
    int arg = -1;        // >= 0 for leaves
    Ptr left, right;

    static Ptr leaf(int a);
    static Ptr node(Ptr l, Ptr r);
    std::string to_string(const std::vector<std::string>& names) const;
};

// Multilinear identity: sum of signed parenthesized terms must vanish.
// A term's sign may additionally flip by (-1)^{|x_a||x_b|} for listed
// argument pairs, evaluated on homogeneous arguments.
struct IdentitySpec {
    struct Term {
        ArgTree::Ptr pattern;
        int sign = 1;
        std::vector<std::pair<std::size_t, std::size_t>> parity_pairs;
    };

    std::string name;
    std::size_t arity = 0;
    std::vector<Term> terms;
    bool needs_grading = false;

    std::string to_string() const;
};

IdentitySpec identity_right_symmetric();
IdentitySpec identity_right_alternative_super();
IdentitySpec identity_associative();
IdentitySpec identity_commutative();

// nullopt for names outside the built-in list
std::optional<IdentitySpec> identity_by_name(const std::string& name);

struct CheckReport {
    std::string identity;
    bool holds = false;
    std::size_t tuples_checked = 0;
    std::optional<std::vector<std::size_t>> witness;   // basis tuple indices
    std::string witness_detail;                        // printed defect / clause
};

// defect evaluated on every basis tuple; sufficient by multilinearity
CheckReport check_multilinear_identity(const AlgebraPtr& alg, const IdentitySpec& id);

// graded algebras only
CheckReport check_super_right_alternative(const AlgebraPtr& alg);

// even part associative and commutative, odd part an associative
// bimodule over it (all one-odd-slot associators vanish)
CheckReport check_abelian_type(const AlgebraPtr& alg);

// image of the algebra over GF(p) with ring variables set to the given
// values; zero images of structure constants are dropped
AlgebraPtr specialize_mod(const AlgebraPtr& alg, const std::vector<std::uint64_t>& point,
                          std::uint64_t p);

// defect evaluated at random element tuples over GF(prime); symbolic
// structure parameters are resampled every trial
CheckReport randomized_check(const AlgebraPtr& alg, const IdentitySpec& id,
                             std::uint64_t prime, std::size_t trials, std::uint64_t seed);

} // namespace rsalg
