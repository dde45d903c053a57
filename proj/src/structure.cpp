#include "rsalg/structure.hpp"

#include "rsalg/errors.hpp"
#include "rsalg/matrix.hpp"

#include <set>
#include <string>

namespace rsalg {

namespace {

void require_field(const AlgebraPtr& alg) {
    if (!alg->ring().is_field())
        throw domain_mismatch("operation needs field coefficients; lift the algebra first");
}

Matrix rows_matrix(const AlgebraPtr& alg, const std::vector<Element>& rows) {
    Matrix m(alg->ring(), rows.size(), alg->dim());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < alg->dim(); ++j)
            m.at(i, j) = rows[i].coord(j);
    return m;
}

std::vector<Element> echelon_rows(const AlgebraPtr& alg, const Matrix& m) {
    auto e = m.rref();
    std::vector<Element> out;
    for (std::size_t r = 0; r < e.rank; ++r) {
        std::vector<Scalar> coords;
        for (std::size_t j = 0; j < alg->dim(); ++j)
            coords.push_back(e.mat.at(r, j));
        out.push_back(Element(alg, std::move(coords)));
    }
    return out;
}

} // namespace

bool Subspace::contains(const Element& v) const {
    if (v.algebra() != algebra)
        throw domain_mismatch("element of a different algebra");
    if (v.is_zero()) return true;
    if (basis.empty()) return false;
    // columns are the basis vectors
    Matrix m(algebra->ring(), algebra->dim(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < algebra->dim(); ++i)
            m.at(i, j) = basis[j].coord(i);
    return m.solve(v.coords()).has_value();
}

Subspace span_of(const AlgebraPtr& alg, const std::vector<Element>& vectors) {
    require_field(alg);
    return Subspace{alg, echelon_rows(alg, rows_matrix(alg, vectors))};
}

AlgebraPtr lift_to_field(const AlgebraPtr& alg) {
    if (alg->ring().is_field()) return alg;
    RingDesc field = alg->ring().field_of_fractions();
    AlgebraSpec::ConstantMap constants;
    for (const auto& [ij, terms] : alg->constants()) {
        std::vector<AlgebraSpec::Term> out;
        for (const auto& t : terms)
            out.push_back({t.k, t.c.lifted_to_field()});
        constants.emplace(ij, std::move(out));
    }
    return AlgebraSpec::create(alg->name(), field, alg->labels(), alg->parity(),
                               std::move(constants));
}

namespace {

// rows of the homogeneous system whose kernel is the center; the column
// for basis vector e_k is every defining condition evaluated at z = e_k
std::vector<std::vector<Scalar>> center_system(const AlgebraPtr& alg, bool even_only) {
    const std::size_t dim = alg->dim();
    std::vector<Element> basis;
    for (std::size_t i = 0; i < dim; ++i)
        basis.push_back(Element::basis(alg, i));

    // products e_i e_j, reused across columns
    std::vector<std::vector<Element>> prod(dim, std::vector<Element>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            prod[i][j] = multiply(basis[i], basis[j]);

    // per column: (z,e_i,e_j), (e_i,z,e_j), (e_i,e_j,z) for all pairs,
    // then [e_i,z] for all i
    std::vector<std::vector<Element>> cols(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        auto& col = cols[k];
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                col.push_back(multiply(prod[k][i], basis[j]) - multiply(basis[k], prod[i][j]));
                col.push_back(multiply(prod[i][k], basis[j]) - multiply(basis[i], prod[k][j]));
                col.push_back(multiply(prod[i][j], basis[k]) - multiply(basis[i], prod[j][k]));
            }
        for (std::size_t i = 0; i < dim; ++i)
            col.push_back(prod[i][k] - prod[k][i]);
    }

    const std::size_t conditions = cols[0].size();
    std::vector<std::vector<Scalar>> rows;
    std::set<std::string> seen;
    Scalar zero = Scalar::zero(alg->ring());
    for (std::size_t c = 0; c < conditions; ++c)
        for (std::size_t coord = 0; coord < dim; ++coord) {
            std::vector<Scalar> row;
            std::string key;
            bool nonzero = false;
            for (std::size_t k = 0; k < dim; ++k) {
                const Scalar& v = cols[k][c].coord(coord);
                if (!v.is_zero()) nonzero = true;
                key += v.to_string();
                key += '|';
                row.push_back(v);
            }
            // the same condition row shows up for many (i,j) pairs
            if (nonzero && seen.insert(std::move(key)).second)
                rows.push_back(std::move(row));
        }
    if (even_only)
        for (std::size_t s = 0; s < dim; ++s)
            if (alg->parity()[s]) {
                std::vector<Scalar> row(dim, zero);
                row[s] = Scalar::one(alg->ring());
                rows.push_back(std::move(row));
            }
    return rows;
}

// intersect the kernel one condition at a time instead of eliminating the
// whole stack at once: the system has rank at most dim, so only a handful
// of rows do real work and the rest reduce to dot products against an
// already-echelonized basis
std::vector<Element> kernel_of_rows(const AlgebraPtr& alg,
                                    const std::vector<std::vector<Scalar>>& rows) {
    const RingDesc& ring = alg->ring();
    const std::size_t dim = alg->dim();
    std::vector<std::vector<Scalar>> K;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Scalar> e(dim, Scalar::zero(ring));
        e[i] = Scalar::one(ring);
        K.push_back(std::move(e));
    }
    for (const auto& r : rows) {
        if (K.empty()) break;
        std::vector<Scalar> s;
        s.reserve(K.size());
        bool all_zero = true;
        for (const auto& k : K) {
            Scalar acc = Scalar::zero(ring);
            for (std::size_t j = 0; j < dim; ++j)
                if (!r[j].is_zero() && !k[j].is_zero())
                    acc = acc + r[j] * k[j];
            if (!acc.is_zero()) all_zero = false;
            s.push_back(std::move(acc));
        }
        if (all_zero) continue;
        Matrix restricted(ring, 1, K.size());
        for (std::size_t j = 0; j < K.size(); ++j)
            restricted.at(0, j) = s[j];
        std::vector<std::vector<Scalar>> next;
        for (const auto& c : restricted.kernel()) {
            std::vector<Scalar> v(dim, Scalar::zero(ring));
            for (std::size_t j = 0; j < K.size(); ++j)
                if (!c[j].is_zero())
                    for (std::size_t t = 0; t < dim; ++t)
                        if (!K[j][t].is_zero())
                            v[t] = v[t] + K[j][t] * c[j];
            next.push_back(std::move(v));
        }
        // re-echelonize so the entries stay small for the remaining rows
        Matrix nm(ring, next.size(), dim);
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j)
                nm.at(i, j) = next[i][j];
        auto e = nm.rref();
        K.clear();
        for (std::size_t i = 0; i < e.rank; ++i) {
            std::vector<Scalar> v;
            for (std::size_t j = 0; j < dim; ++j)
                v.push_back(e.mat.at(i, j));
            K.push_back(std::move(v));
        }
    }
    std::vector<Element> out;
    for (auto& v : K)
        out.push_back(Element(alg, std::move(v)));
    return out;
}

Subspace center_impl(const AlgebraPtr& alg, bool even_only) {
    require_field(alg);
    auto vecs = kernel_of_rows(alg, center_system(alg, even_only));
    return span_of(alg, vecs);
}

} // namespace

Subspace compute_center(const AlgebraPtr& alg) {
    return center_impl(alg, false);
}

Subspace compute_even_center(const AlgebraPtr& alg) {
    if (!alg->graded())
        throw domain_mismatch("even center needs a graded algebra");
    return center_impl(alg, true);
}

std::optional<Element> find_unit(const AlgebraPtr& alg) {
    require_field(alg);
    const std::size_t dim = alg->dim();
    // unknown u: u e_i = e_i and e_i u = e_i for every basis vector
    Matrix m(alg->ring(), 2 * dim * dim, dim);
    std::vector<Scalar> rhs;
    rhs.reserve(2 * dim * dim);
    std::size_t r = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        Element ei = Element::basis(alg, i);
        for (std::size_t k = 0; k < dim; ++k) {
            Element left = multiply(Element::basis(alg, k), ei);    // coeff of u_k in u e_i
            Element right = multiply(ei, Element::basis(alg, k));   // coeff of u_k in e_i u
            for (std::size_t coord = 0; coord < dim; ++coord) {
                m.at(r + coord, k) = left.coord(coord);
                m.at(r + dim + coord, k) = right.coord(coord);
            }
        }
        for (int side = 0; side < 2; ++side)
            for (std::size_t coord = 0; coord < dim; ++coord)
                rhs.push_back(coord == i ? Scalar::one(alg->ring()) : Scalar::zero(alg->ring()));
        r += 2 * dim;
    }
    auto sol = m.solve(rhs);
    if (!sol) return std::nullopt;
    Element u(alg, *sol);
    for (std::size_t i = 0; i < dim; ++i) {
        Element b = Element::basis(alg, i);
        if (!(multiply(u, b) == b) || !(multiply(b, u) == b))
            return std::nullopt;
    }
    return u;
}

namespace {

// smallest subspace containing seed that is closed under products with
// all basis vectors (and under parity projections in graded mode)
std::vector<Element> ideal_closure(const AlgebraPtr& alg, const Element& seed, bool graded) {
    std::vector<Element> work = {seed};
    if (graded && alg->graded()) {
        auto project = [&](const Element& x, int want) {
            std::vector<Scalar> c(x.coords());
            for (std::size_t i = 0; i < c.size(); ++i)
                if (alg->parity()[i] != want)
                    c[i] = Scalar::zero(alg->ring());
            return Element(alg, std::move(c));
        };
        work.push_back(project(seed, 0));
        work.push_back(project(seed, 1));
    }
    std::vector<Element> basis = echelon_rows(alg, rows_matrix(alg, work));
    for (std::size_t round = 0; round <= alg->dim(); ++round) {
        std::vector<Element> all = basis;
        for (const auto& v : basis)
            for (std::size_t i = 0; i < alg->dim(); ++i) {
                Element b = Element::basis(alg, i);
                all.push_back(multiply(v, b));
                all.push_back(multiply(b, v));
            }
        // parity projections keep graded closures graded
        if (graded && alg->graded()) {
            std::size_t n = all.size();
            for (std::size_t t = 0; t < n; ++t) {
                std::vector<Scalar> even(all[t].coords()), odd(all[t].coords());
                for (std::size_t i = 0; i < alg->dim(); ++i) {
                    if (alg->parity()[i]) even[i] = Scalar::zero(alg->ring());
                    else odd[i] = Scalar::zero(alg->ring());
                }
                all.push_back(Element(alg, std::move(even)));
                all.push_back(Element(alg, std::move(odd)));
            }
        }
        std::vector<Element> next = echelon_rows(alg, rows_matrix(alg, all));
        if (next.size() == basis.size()) return next;
        basis = std::move(next);
        if (basis.size() == alg->dim()) return basis;
    }
    return basis;
}

} // namespace

SimplicityVerdict check_simple(const AlgebraPtr& alg, bool graded) {
    require_field(alg);
    if (graded && !alg->graded())
        throw domain_mismatch("graded simplicity needs a graded algebra");
    SimplicityVerdict v;
    v.graded = graded;
    v.ambient_dim = alg->dim();

    if (alg->constants().empty()) {
        // zero multiplication: the span of any basis vector is an ideal
        v.simple = false;
        v.generators_tested.push_back(alg->labels()[0]);
        v.witness_generator = alg->labels()[0];
        v.witness_closure_basis = {Element::basis(alg, 0)};
        v.witness_closure_dim = 1;
        return v;
    }

    std::vector<std::pair<std::string, Element>> generators;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        generators.emplace_back(alg->labels()[i], Element::basis(alg, i));
    // one dense element with distinct small coordinates
    std::vector<Scalar> dense;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        dense.push_back(Scalar::from_int(alg->ring(), static_cast<std::int64_t>(i + 1)));
    generators.emplace_back("dense", Element(alg, std::move(dense)));

    v.simple = true;
    for (const auto& [label, gen] : generators) {
        v.generators_tested.push_back(label);
        auto closure = ideal_closure(alg, gen, graded);
        if (closure.size() < alg->dim()) {
            v.simple = false;
            v.witness_generator = label;
            v.witness_closure_dim = closure.size();
            v.witness_closure_basis = closure;
            break;
        }
    }
    return v;
}

} // namespace rsalg
