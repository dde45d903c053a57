#include "rsalg/algebra.hpp"

#include "rsalg/errors.hpp"

namespace rsalg {

AlgebraPtr AlgebraSpec::create(std::string name,
                               RingDesc ring,
                               std::vector<std::string> labels,
                               std::vector<int> parity,
                               ConstantMap constants) {
    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->name_ = std::move(name);
    spec->ring_ = std::move(ring);
    spec->labels_ = std::move(labels);
    spec->parity_ = std::move(parity);
    const std::size_t dim = spec->labels_.size();
    if (dim == 0)
        throw validation_error("algebra needs at least one basis vector");
    if (spec->parity_.empty())
        spec->parity_.assign(dim, 0);
    if (spec->parity_.size() != dim)
        throw validation_error("parity vector length differs from basis count");
    for (int p : spec->parity_) {
        if (p != 0 && p != 1)
            throw validation_error("parity entries must be 0 or 1");
        if (p == 1) spec->graded_ = true;
    }
    for (auto& [ij, terms] : constants) {
        auto [i, j] = ij;
        if (i >= dim || j >= dim)
            throw validation_error("structure constant index out of range");
        for (auto& t : terms) {
            if (t.k >= dim)
                throw validation_error("structure constant target out of range");
            if (t.c.is_zero())
                throw validation_error("stored structure constant is zero");
            if (!(t.c.ring() == spec->ring_))
                throw domain_mismatch("structure constant from a different ring");
            if (spec->graded_) {
                int want = (spec->parity_[i] + spec->parity_[j]) % 2;
                if (spec->parity_[t.k] != want)
                    throw validation_error(
                        "grading violation: product of basis " + std::to_string(i) +
                        " and " + std::to_string(j) + " hits basis " + std::to_string(t.k) +
                        " of wrong parity");
            }
        }
        // canonical order inside one product, no duplicate targets
        std::map<std::size_t, Scalar> seen;
        for (auto& t : terms) {
            if (!seen.emplace(t.k, t.c).second)
                throw validation_error("duplicate target in structure constants");
        }
        terms.clear();
        for (auto& [k, c] : seen)
            terms.push_back(Term{k, c});
    }
    spec->constants_ = std::move(constants);
    return spec;
}

const std::vector<AlgebraSpec::Term>& AlgebraSpec::product(std::size_t i, std::size_t j) const {
    auto it = constants_.find({i, j});
    return it == constants_.end() ? empty_ : it->second;
}

std::string parity_name(Parity p) {
    switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
    case Parity::Zero: return "zero";
    }
    return "?";
}

Element::Element(AlgebraPtr algebra, std::vector<Scalar> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (!algebra_)
        throw validation_error("element without algebra");
    if (coords_.size() != algebra_->dim())
        throw validation_error("coordinate count differs from algebra dimension");
}

Element Element::zero(const AlgebraPtr& algebra) {
    return Element(algebra, std::vector<Scalar>(algebra->dim(), Scalar::zero(algebra->ring())));
}

Element Element::basis(const AlgebraPtr& algebra, std::size_t i) {
    if (i >= algebra->dim())
        throw validation_error("basis index out of range");
    Element e = zero(algebra);
    e.coords_[i] = Scalar::one(algebra->ring());
    return e;
}

bool Element::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

bool Element::operator==(const Element& o) const {
    return algebra_ == o.algebra_ && coords_ == o.coords_;
}

static void require_same_algebra(const Element& a, const Element& b) {
    if (a.algebra() != b.algebra())
        throw domain_mismatch("elements of different algebras");
}

Element Element::operator+(const Element& o) const {
    require_same_algebra(*this, o);
    std::vector<Scalar> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = c[i] + o.coords_[i];
    return Element(algebra_, std::move(c));
}

Element Element::operator-(const Element& o) const {
    require_same_algebra(*this, o);
    std::vector<Scalar> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = c[i] - o.coords_[i];
    return Element(algebra_, std::move(c));
}

Element Element::operator-() const {
    std::vector<Scalar> c(coords_);
    for (auto& x : c) x = -x;
    return Element(algebra_, std::move(c));
}

Element Element::scaled(const Scalar& s) const {
    std::vector<Scalar> c(coords_);
    for (auto& x : c) x = x * s;
    return Element(algebra_, std::move(c));
}

std::string Element::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (coords_[i].is_one())
            out += algebra_->labels()[i];
        else
            out += "(" + coords_[i].to_string() + ")*" + algebra_->labels()[i];
    }
    return out.empty() ? "0" : out;
}

Element multiply(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    const auto& alg = a.algebra();
    std::vector<Scalar> coords(alg->dim(), Scalar::zero(alg->ring()));
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        const Scalar& ai = a.coord(i);
        if (ai.is_zero()) continue;
        for (std::size_t j = 0; j < alg->dim(); ++j) {
            const Scalar& bj = b.coord(j);
            if (bj.is_zero()) continue;
            const auto& terms = alg->product(i, j);
            if (terms.empty()) continue;
            Scalar ab = ai * bj;
            for (const auto& t : terms)
                coords[t.k] = coords[t.k] + ab * t.c;
        }
    }
    return Element(alg, std::move(coords));
}

Element associator(const Element& x, const Element& y, const Element& z) {
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

Element commutator(const Element& x, const Element& y) {
    return multiply(x, y) - multiply(y, x);
}

Parity parity_of(const Element& x) {
    bool has_even = false, has_odd = false;
    const auto& par = x.algebra()->parity();
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (x.coord(i).is_zero()) continue;
        (par[i] ? has_odd : has_even) = true;
    }
    if (has_even && has_odd) return Parity::Mixed;
    if (has_odd) return Parity::Odd;
    if (has_even) return Parity::Even;
    return Parity::Zero;
}

WordTree::Ptr WordTree::leaf(std::string name) {
    auto t = std::make_shared<WordTree>();
    t->leaf_name = std::move(name);
    return t;
}

WordTree::Ptr WordTree::node(Ptr l, Ptr r) {
    auto t = std::make_shared<WordTree>();
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

WordTree::Ptr WordTree::node(Ptr l, Ptr r, Scalar factor) {
    auto t = std::make_shared<WordTree>();
    t->left = std::move(l);
    t->right = std::move(r);
    t->factor = std::move(factor);
    return t;
}

WordTree::Ptr WordTree::scaled(Ptr inner, Scalar factor) {
    auto t = std::make_shared<WordTree>(*inner);
    if (t->factor)
        t->factor = *t->factor * factor;
    else
        t->factor = std::move(factor);
    return t;
}

std::string WordTree::to_string() const {
    std::string core = is_leaf()
        ? leaf_name
        : "(" + left->to_string() + " " + right->to_string() + ")";
    if (factor)
        return "[" + factor->to_string() + "]*" + core;
    return core;
}

Element evaluate_word(const WordTree::Ptr& tree, const std::map<std::string, Element>& bindings) {
    if (!tree)
        throw validation_error("empty word");
    Element v;
    if (tree->is_leaf()) {
        auto it = bindings.find(tree->leaf_name);
        if (it == bindings.end())
            throw incomplete_assignment("unbound name '" + tree->leaf_name + "'");
        v = it->second;
    } else {
        v = multiply(evaluate_word(tree->left, bindings),
                     evaluate_word(tree->right, bindings));
    }
    if (tree->factor)
        v = v.scaled(*tree->factor);
    return v;
}

} // namespace rsalg
