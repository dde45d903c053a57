#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsalg/scalar.hpp"

namespace rsalg {

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

// Finite-dimensional algebra given by structure constants over one
// coefficient ring, frozen after construction. An all-zero parity vector
// means ungraded.
class AlgebraSpec {
public:
    // one product entry: e_i * e_j has coefficient c on e_k
    struct Term {
        std::size_t k;
        Scalar c;
    };
    using ConstantMap = std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>>;

    static AlgebraPtr create(std::string name,
                             RingDesc ring,
                             std::vector<std::string> labels,
                             std::vector<int> parity,
                             ConstantMap constants);

    const std::string& name() const { return name_; }
    const RingDesc& ring() const { return ring_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& parity() const { return parity_; }
    bool graded() const { return graded_; }
    const ConstantMap& constants() const { return constants_; }

    // structure constants of e_i * e_j (empty when the product is zero)
    const std::vector<Term>& product(std::size_t i, std::size_t j) const;

private:
    AlgebraSpec() = default;

    std::string name_;
    RingDesc ring_;
    std::vector<std::string> labels_;
    std::vector<int> parity_;
    bool graded_ = false;
    ConstantMap constants_;
    std::vector<Term> empty_;
};

enum class Parity { Even, Odd, Mixed, Zero };

std::string parity_name(Parity p);

// Value in an algebra: coordinate vector over the algebra's ring.
class Element {
public:
    Element() = default;
    Element(AlgebraPtr algebra, std::vector<Scalar> coords);

    static Element zero(const AlgebraPtr& algebra);
    static Element basis(const AlgebraPtr& algebra, std::size_t i);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(std::size_t i) const { return coords_.at(i); }

    bool is_zero() const;
    bool operator==(const Element& o) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;

    std::string to_string() const;

private:
    AlgebraPtr algebra_;
    std::vector<Scalar> coords_;
};

Element multiply(const Element& a, const Element& b);
Element associator(const Element& x, const Element& y, const Element& z);
Element commutator(const Element& x, const Element& y);
Parity parity_of(const Element& x);

// Nested product expression; leaves name bound elements, inner nodes
// multiply and may carry a scalar factor.
struct WordTree {
    using Ptr = std::shared_ptr<const WordTree>;

    std::string leaf_name;          // nonempty for leaves
    Ptr left, right;                // set for nodes
    std::optional<Scalar> factor;

    bool is_leaf() const { return !left; }

    static Ptr leaf(std::string name);
    static Ptr node(Ptr l, Ptr r);
    static Ptr node(Ptr l, Ptr r, Scalar factor);
    static Ptr scaled(Ptr t, Scalar factor);

    std::string to_string() const;
};

Element evaluate_word(const WordTree::Ptr& tree, const std::map<std::string, Element>& bindings);

} // namespace rsalg
