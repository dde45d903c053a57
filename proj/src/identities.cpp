#include "rsalg/identities.hpp"

#include <random>

#include "rsalg/errors.hpp"
#include "rsalg/parallel.hpp"

namespace rsalg {

ArgTree::Ptr ArgTree::leaf(int a) {
    auto t = std::make_shared<ArgTree>();
    t->arg = a;
    return t;
}

ArgTree::Ptr ArgTree::node(Ptr l, Ptr r) {
    auto t = std::make_shared<ArgTree>();
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

std::string ArgTree::to_string(const std::vector<std::string>& names) const {
    if (arg >= 0) return names.at(static_cast<std::size_t>(arg));
    return "(" + left->to_string(names) + right->to_string(names) + ")";
}

std::string IdentitySpec::to_string() const {
    static const std::vector<std::string> names = {"x", "y", "z", "w"};
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty() || t.sign < 0)
            out += t.sign < 0 ? " - " : " + ";
        std::string sgn;
        for (auto [a, b] : t.parity_pairs)
            sgn += "(-1)^|" + names.at(a) + "||" + names.at(b) + "| ";
        out += sgn + t.pattern->to_string(names);
    }
    return out + " = 0";
}

namespace {

ArgTree::Ptr L(int a) { return ArgTree::leaf(a); }
ArgTree::Ptr N(ArgTree::Ptr l, ArgTree::Ptr r) { return ArgTree::node(std::move(l), std::move(r)); }

void count_args(const ArgTree::Ptr& t, std::vector<std::size_t>& uses) {
    if (t->arg >= 0) {
        uses.at(static_cast<std::size_t>(t->arg))++;
        return;
    }
    count_args(t->left, uses);
    count_args(t->right, uses);
}

void validate_identity(const IdentitySpec& id) {
    if (id.arity == 0 || id.terms.empty())
        throw validation_error("identity without terms");
    for (const auto& t : id.terms) {
        std::vector<std::size_t> uses(id.arity, 0);
        count_args(t.pattern, uses);
        for (std::size_t u : uses)
            if (u != 1)
                throw validation_error("identity '" + id.name + "' is not multilinear");
        for (auto [a, b] : t.parity_pairs)
            if (a >= id.arity || b >= id.arity)
                throw validation_error("parity pair out of range in '" + id.name + "'");
    }
}

Element eval_pattern(const ArgTree::Ptr& t, const std::vector<Element>& args) {
    if (t->arg >= 0) return args[static_cast<std::size_t>(t->arg)];
    return multiply(eval_pattern(t->left, args), eval_pattern(t->right, args));
}

bool uses_parity(const IdentitySpec& id) {
    for (const auto& t : id.terms)
        if (!t.parity_pairs.empty()) return true;
    return false;
}

// defect of the identity on homogeneous arguments with the given parities
Element defect_homogeneous(const IdentitySpec& id, const std::vector<Element>& args,
                           const std::vector<int>& parities) {
    Element acc = Element::zero(args[0].algebra());
    for (const auto& t : id.terms) {
        int sign = t.sign;
        for (auto [a, b] : t.parity_pairs)
            if (parities[a] && parities[b]) sign = -sign;
        Element v = eval_pattern(t.pattern, args);
        acc = sign > 0 ? acc + v : acc - v;
    }
    return acc;
}

// defect on arbitrary arguments: decompose into homogeneous parts when
// any sign depends on parity
Element defect_general(const IdentitySpec& id, const std::vector<Element>& args) {
    const auto& alg = args[0].algebra();
    if (!uses_parity(id)) {
        std::vector<int> parities(id.arity, 0);
        return defect_homogeneous(id, args, parities);
    }
    auto part = [&](const Element& x, int want) {
        std::vector<Scalar> c(x.coords());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (alg->parity()[i] != want)
                c[i] = Scalar::zero(alg->ring());
        return Element(alg, std::move(c));
    };
    Element acc = Element::zero(alg);
    for (std::size_t combo = 0; combo < (1u << id.arity); ++combo) {
        std::vector<Element> parts;
        std::vector<int> parities(id.arity);
        bool dead = false;
        for (std::size_t a = 0; a < id.arity; ++a) {
            int p = (combo >> a) & 1;
            Element h = part(args[a], p);
            if (h.is_zero()) { dead = true; break; }
            parts.push_back(std::move(h));
            parities[a] = p;
        }
        if (dead) continue;
        acc = acc + defect_homogeneous(id, parts, parities);
    }
    return acc;
}

void tuple_of_index(std::size_t idx, std::size_t dim, std::vector<std::size_t>& tuple) {
    for (std::size_t a = tuple.size(); a-- > 0;) {
        tuple[a] = idx % dim;
        idx /= dim;
    }
}

} // namespace

IdentitySpec identity_right_symmetric() {
    IdentitySpec id;
    id.name = "right-symmetric";
    id.arity = 3;
    id.terms = {
        {N(N(L(0), L(1)), L(2)), +1, {}},
        {N(L(0), N(L(1), L(2))), -1, {}},
        {N(N(L(0), L(2)), L(1)), -1, {}},
        {N(L(0), N(L(2), L(1))), +1, {}},
    };
    return id;
}

IdentitySpec identity_right_alternative_super() {
    IdentitySpec id;
    id.name = "right-alternative-super";
    id.arity = 3;
    id.terms = {
        {N(N(L(0), L(1)), L(2)), +1, {}},
        {N(L(0), N(L(1), L(2))), -1, {}},
        {N(N(L(0), L(2)), L(1)), +1, {{1, 2}}},
        {N(L(0), N(L(2), L(1))), -1, {{1, 2}}},
    };
    id.needs_grading = true;
    return id;
}

IdentitySpec identity_associative() {
    IdentitySpec id;
    id.name = "associative";
    id.arity = 3;
    id.terms = {
        {N(N(L(0), L(1)), L(2)), +1, {}},
        {N(L(0), N(L(1), L(2))), -1, {}},
    };
    return id;
}

IdentitySpec identity_commutative() {
    IdentitySpec id;
    id.name = "commutative";
    id.arity = 2;
    id.terms = {
        {N(L(0), L(1)), +1, {}},
        {N(L(1), L(0)), -1, {}},
    };
    return id;
}

std::optional<IdentitySpec> identity_by_name(const std::string& name) {
    if (name == "right-symmetric") return identity_right_symmetric();
    if (name == "right-alternative-super") return identity_right_alternative_super();
    if (name == "associative") return identity_associative();
    if (name == "commutative") return identity_commutative();
    return std::nullopt;
}

CheckReport check_multilinear_identity(const AlgebraPtr& alg, const IdentitySpec& id) {
    validate_identity(id);
    if (id.needs_grading && !alg->graded())
        throw domain_mismatch("identity '" + id.name + "' needs a graded algebra");
    const std::size_t dim = alg->dim();
    std::size_t total = 1;
    for (std::size_t a = 0; a < id.arity; ++a) total *= dim;

    struct ChunkResult {
        std::optional<std::size_t> first_bad;
    };
    std::vector<ChunkResult> results(std::min(worker_count(), total));
    run_chunked(total, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<std::size_t> tuple(id.arity);
        std::vector<Element> args(id.arity);
        std::vector<int> parities(id.arity);
        for (std::size_t idx = begin; idx < end; ++idx) {
            tuple_of_index(idx, dim, tuple);
            for (std::size_t a = 0; a < id.arity; ++a) {
                args[a] = Element::basis(alg, tuple[a]);
                parities[a] = alg->parity()[tuple[a]];
            }
            if (!defect_homogeneous(id, args, parities).is_zero()) {
                if (!results[chunk].first_bad)
                    results[chunk].first_bad = idx;
            }
        }
    });

    CheckReport rep;
    rep.identity = id.name;
    rep.tuples_checked = total;
    rep.holds = true;
    for (const auto& r : results) {
        if (r.first_bad) {
            rep.holds = false;
            std::vector<std::size_t> tuple(id.arity);
            tuple_of_index(*r.first_bad, dim, tuple);
            rep.witness = tuple;
            std::vector<Element> args;
            std::vector<int> parities;
            for (std::size_t t : tuple) {
                args.push_back(Element::basis(alg, t));
                parities.push_back(alg->parity()[t]);
            }
            rep.witness_detail = defect_homogeneous(id, args, parities).to_string();
            break;
        }
    }
    return rep;
}

CheckReport check_super_right_alternative(const AlgebraPtr& alg) {
    return check_multilinear_identity(alg, identity_right_alternative_super());
}

CheckReport check_abelian_type(const AlgebraPtr& alg) {
    if (!alg->graded())
        throw domain_mismatch("abelian-type check needs a graded algebra");
    std::vector<std::size_t> evens, odds;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        (alg->parity()[i] ? odds : evens).push_back(i);

    CheckReport rep;
    rep.identity = "abelian-type";
    rep.holds = true;

    auto fail = [&](std::vector<std::size_t> tuple, const Element& defect, const char* clause) {
        if (!rep.holds) return;
        rep.holds = false;
        rep.witness = std::move(tuple);
        rep.witness_detail = std::string(clause) + ": " + defect.to_string();
    };

    for (std::size_t i : evens)
        for (std::size_t j : evens) {
            ++rep.tuples_checked;
            Element d = commutator(Element::basis(alg, i), Element::basis(alg, j));
            if (!d.is_zero()) fail({i, j}, d, "even commutativity");
        }
    for (std::size_t i : evens)
        for (std::size_t j : evens)
            for (std::size_t k : evens) {
                ++rep.tuples_checked;
                Element d = associator(Element::basis(alg, i), Element::basis(alg, j),
                                       Element::basis(alg, k));
                if (!d.is_zero()) fail({i, j, k}, d, "even associativity");
            }
    // one odd slot in each position: the odd part is an associative
    // bimodule over the even part
    for (std::size_t pos = 0; pos < 3; ++pos)
        for (std::size_t m : odds)
            for (std::size_t i : evens)
                for (std::size_t j : evens) {
                    std::vector<std::size_t> tuple = {i, j};
                    tuple.insert(tuple.begin() + static_cast<std::ptrdiff_t>(pos), m);
                    ++rep.tuples_checked;
                    Element d = associator(Element::basis(alg, tuple[0]),
                                           Element::basis(alg, tuple[1]),
                                           Element::basis(alg, tuple[2]));
                    if (!d.is_zero()) fail(tuple, d, "mixed associator");
                }
    return rep;
}

AlgebraPtr specialize_mod(const AlgebraPtr& alg, const std::vector<std::uint64_t>& point,
                          std::uint64_t p) {
    RingDesc gf = RingDesc::gf(p);
    AlgebraSpec::ConstantMap constants;
    for (const auto& [ij, terms] : alg->constants()) {
        std::vector<AlgebraSpec::Term> out;
        for (const auto& t : terms) {
            std::uint64_t v = t.c.eval_mod(point, p);
            if (v != 0)
                out.push_back({t.k, Scalar(PrimeFieldElement{v, p})});
        }
        if (!out.empty())
            constants.emplace(ij, std::move(out));
    }
    return AlgebraSpec::create(alg->name() + " mod " + std::to_string(p), gf,
                               alg->labels(), alg->parity(), std::move(constants));
}

CheckReport randomized_check(const AlgebraPtr& alg, const IdentitySpec& id,
                             std::uint64_t prime, std::size_t trials, std::uint64_t seed) {
    validate_identity(id);
    if (id.needs_grading && !alg->graded())
        throw domain_mismatch("identity '" + id.name + "' needs a graded algebra");
    RingDesc::gf(prime);   // validates the prime
    std::size_t nvars = alg->ring().ring ? alg->ring().ring->nvars() : 0;

    CheckReport rep;
    rep.identity = id.name;
    rep.holds = true;

    std::mt19937_64 rng(seed);
    auto draw = [&] { return rng() % prime; };

    for (std::size_t trial = 0; trial < trials; ++trial) {
        AlgebraPtr shadow;
        std::vector<std::uint64_t> params;
        for (int attempt = 0;; ++attempt) {
            params.clear();
            for (std::size_t v = 0; v < nvars; ++v) params.push_back(draw());
            try {
                shadow = specialize_mod(alg, params, prime);
                break;
            } catch (const characteristic_error&) {
                throw;
            } catch (const division_by_zero&) {
                if (attempt > 64)
                    throw error("could not sample structure parameters mod " +
                                std::to_string(prime));
            }
        }
        std::vector<Element> args;
        std::vector<std::uint64_t> sample = params;
        for (std::size_t a = 0; a < id.arity; ++a) {
            std::vector<Scalar> coords;
            for (std::size_t i = 0; i < shadow->dim(); ++i) {
                std::uint64_t v = draw();
                sample.push_back(v);
                coords.push_back(Scalar(PrimeFieldElement{v, prime}));
            }
            args.push_back(Element(shadow, std::move(coords)));
        }
        ++rep.tuples_checked;
        Element d = defect_general(id, args);
        if (!d.is_zero()) {
            rep.holds = false;
            rep.witness = std::vector<std::size_t>(sample.begin(), sample.end());
            rep.witness_detail = "trial " + std::to_string(trial) + ": " + d.to_string();
            return rep;
        }
    }
    return rep;
}

} // namespace rsalg
