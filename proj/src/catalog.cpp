#include "rsalg/catalog.hpp"

#include "rsalg/errors.hpp"

namespace rsalg {

namespace {

// accumulating builder so product rules can be stated additively
struct Builder {
    AlgebraSpec::ConstantMap out;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> acc;

    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        if (c.is_zero()) return;
        auto& row = acc[{i, j}];
        auto it = row.find(k);
        if (it == row.end())
            row.emplace(k, c);
        else
            it->second = it->second + c;
    }

    AlgebraSpec::ConstantMap take() {
        for (auto& [ij, row] : acc) {
            std::vector<AlgebraSpec::Term> terms;
            for (auto& [k, c] : row)
                if (!c.is_zero())
                    terms.push_back({k, c});
            if (!terms.empty())
                out.emplace(ij, std::move(terms));
        }
        return std::move(out);
    }
};

// dense 2x2 matrix over Scalar, row major
using M2 = std::array<Scalar, 4>;

M2 m2_zero(const RingDesc& ring) {
    Scalar z = Scalar::zero(ring);
    return {z, z, z, z};
}

M2 m2_unit(const RingDesc& ring, std::size_t i, std::size_t j) {
    M2 m = m2_zero(ring);
    m[2 * i + j] = Scalar::one(ring);
    return m;
}

M2 m2_mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

M2 m2_sub(const M2& a, const M2& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

M2 m2_scale(const M2& a, const Scalar& c) {
    return {a[0] * c, a[1] * c, a[2] * c, a[3] * c};
}

bool scalar_invertible(const Scalar& s) {
    if (s.is_zero()) return false;
    if (s.kind() == RingKind::Poly)
        return s.as_poly().is_constant();
    return true;
}

} // namespace

AlgebraPtr matrix_rs(std::size_t n, const RingDesc& ring) {
    if (n < 2)
        throw parameter_error("matrix_rs needs n >= 2");
    const std::size_t dim = n + n * n;
    auto V = [&](std::size_t i) { return i; };
    auto M = [&](std::size_t i, std::size_t j) { return n + i * n + j; };
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < n; ++i)
        labels[V(i)] = "e" + std::to_string(i + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels[M(i, j)] = "e" + std::to_string(i + 1) + std::to_string(j + 1);

    Scalar one = Scalar::one(ring);
    Builder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add(V(i), V(i), V(i), one);                      // v o w
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            b.add(V(i), M(i, k), V(k), one);               // vB
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j)
                    b.add(M(j, k), V(i), V(k), one);       // wA
                if (k == i)
                    b.add(M(j, k), V(i), M(j, i), one);    // A diag(v)
                if (i == j)
                    b.add(M(j, k), V(i), M(i, k), -one);   // -diag(v) A
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                b.add(M(i, j), M(j, l), M(i, l), one);     // AB
    return AlgebraSpec::create("matrix_rs(" + std::to_string(n) + ")", ring,
                               std::move(labels), {}, b.take());
}

AlgebraPtr rs_v2m2(const BulletTable& bullet, const HadamardMask& mask, const RingDesc& ring) {
    auto V = [](std::size_t i) { return i; };
    auto M = [](std::size_t i, std::size_t j) { return 2 + 2 * i + j; };
    std::vector<std::string> labels = {"e1", "e2", "e11", "e12", "e21", "e22"};

    // pair index for e_s • e_t, s,t zero-based
    auto bidx = [](std::size_t s, std::size_t t) { return 2 * s + t; };
    Scalar one = Scalar::one(ring);
    Builder b;

    // w.u = w•u + psi_C(u) pi(w); on basis w=e_s, u=e_t:
    // pi(e_s) has both rows equal to e_s; psi_C(e_t) = pi(e_t) entrywise C
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t) {
            b.add(V(s), V(t), V(0), bullet.gamma[bidx(s, t)]);
            b.add(V(s), V(t), V(1), bullet.delta[bidx(s, t)]);
            M2 pi_w = m2_zero(ring);
            pi_w[0 * 2 + s] = one;
            pi_w[1 * 2 + s] = one;
            M2 psi_u = m2_zero(ring);
            psi_u[0 * 2 + t] = mask.epsilon[0 * 2 + t];
            psi_u[1 * 2 + t] = mask.epsilon[1 * 2 + t];
            M2 corr = m2_mul(psi_u, pi_w);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    b.add(V(s), V(t), M(i, j), corr[2 * i + j]);
        }

    // v.A = vA
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            b.add(V(i), M(i, k), V(k), one);

    // A.v = vA + [A, R(v)], row i of R(v) = e_i • v
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t t = 0; t < 2; ++t) {
                if (t == j)
                    b.add(M(j, k), V(t), V(k), one);
                M2 A = m2_unit(ring, j, k);
                M2 R;
                for (std::size_t i = 0; i < 2; ++i) {
                    R[2 * i + 0] = bullet.gamma[bidx(i, t)];
                    R[2 * i + 1] = bullet.delta[bidx(i, t)];
                }
                M2 comm = m2_sub(m2_mul(A, R), m2_mul(R, A));
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t l = 0; l < 2; ++l)
                        b.add(M(j, k), V(t), M(i, l), comm[2 * i + l]);
            }

    // AB
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t l = 0; l < 2; ++l)
                b.add(M(i, j), M(j, l), M(i, l), one);

    return AlgebraSpec::create("rs_v2m2", ring, std::move(labels), {}, b.take());
}

AlgebraPtr b_nn(std::size_t n, const RingDesc& ring) {
    if (n < 2)
        throw parameter_error("b_nn needs n >= 2");
    auto E = [](std::size_t i) { return i; };
    auto O = [n](std::size_t i) { return n + i; };
    std::vector<std::string> labels(2 * n);
    std::vector<int> parity(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        labels[E(i)] = "e" + std::to_string(i + 1);
        labels[O(i)] = "[e" + std::to_string(i + 1) + "]";
        parity[O(i)] = 1;
    }
    Scalar one = Scalar::one(ring);
    Builder b;
    for (std::size_t i = 0; i < n; ++i) {
        b.add(E(i), E(i), E(i), one);
        b.add(O(i), O(i), E(i), one);
        b.add(E(i), O(i), O(i), one);
        // tau shifts coordinates down cyclically: tau(e_j) = e_{j-1}
        std::size_t j = (i + 1) % n;
        b.add(O(i), E(j), O(i), one);
    }
    return AlgebraSpec::create("b_nn(" + std::to_string(n) + ")", ring,
                               std::move(labels), std::move(parity), b.take());
}

AlgebraPtr b_22(const Scalar& nu, const RingDesc& ring) {
    if (!(nu.ring() == ring))
        throw domain_mismatch("nu is not from the coefficient ring");
    std::vector<std::string> labels = {"e1", "e2", "[e1]", "[e2]"};
    std::vector<int> parity = {0, 0, 1, 1};
    Scalar one = Scalar::one(ring);
    Builder b;
    b.add(0, 0, 0, one);
    b.add(1, 1, 1, one);
    // [x].[y] = x o chi(y), chi(e1) = (1,1), chi(e2) = (1,nu)
    b.add(2, 2, 0, one);
    b.add(2, 3, 0, one);
    b.add(3, 2, 1, one);
    b.add(3, 3, 1, nu);
    // x.[y] = [x o y]
    b.add(0, 2, 2, one);
    b.add(1, 3, 3, one);
    // [x].y = [x o y*], star swaps the coordinates
    b.add(2, 1, 2, one);
    b.add(3, 0, 3, one);
    return AlgebraSpec::create("b_22", ring, std::move(labels), std::move(parity), b.take());
}

AlgebraPtr b_44(const WMatrix& w, const RingDesc& ring) {
    Scalar tr = w.a + w.d;
    if (!scalar_invertible(tr))
        throw parameter_error("b_44 needs invertible trace of w");
    Scalar tr_inv = tr.inverse();
    M2 wm = {w.a, w.b, w.c, w.d};

    auto E = [](std::size_t i, std::size_t j) { return 2 * i + j; };
    auto O = [](std::size_t i, std::size_t j) { return 4 + 2 * i + j; };
    std::vector<std::string> labels(8);
    std::vector<int> parity(8, 0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
            labels[E(i, j)] = "e" + ij;
            labels[O(i, j)] = "[e" + ij + "]";
            parity[O(i, j)] = 1;
        }

    // symplectic involution on matrix units
    auto bar = [&](std::size_t i, std::size_t j) {
        M2 m = m2_zero(ring);
        if (i == j)
            m[2 * (1 - i) + (1 - j)] = Scalar::one(ring);
        else
            m[2 * i + j] = -Scalar::one(ring);
        return m;
    };

    Builder b;
    auto emit = [&](std::size_t li, std::size_t lj, const M2& m, bool odd) {
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                b.add(li, lj, (odd ? O(i, j) : E(i, j)), m[2 * i + j]);
    };

    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    M2 x = m2_unit(ring, i, j);
                    M2 y = m2_unit(ring, k, l);
                    // even.even: plain matrix product
                    emit(E(i, j), E(k, l), m2_mul(x, y), false);
                    // odd.odd: (tr(y)/tr(w)) x
                    if (k == l)
                        emit(O(i, j), O(k, l), m2_scale(x, tr_inv), false);
                    // odd.even: [x bar(y)]
                    emit(O(i, j), E(k, l), m2_mul(x, bar(k, l)), true);
                    // even.odd: [xy - ([x][y])^D], a^D = aw - wa
                    M2 xy = m2_mul(x, y);
                    if (k == l) {
                        M2 d = m2_scale(m2_sub(m2_mul(x, wm), m2_mul(wm, x)), tr_inv);
                        xy = m2_sub(xy, d);
                    }
                    emit(E(i, j), O(k, l), xy, true);
                }
    return AlgebraSpec::create("b_44", ring, std::move(labels), std::move(parity), b.take());
}

AlgebraPtr rs_v2m2_symbolic() {
    std::vector<std::string> vars;
    for (const char* base : {"gamma", "delta", "epsilon"})
        for (int i = 1; i <= 4; ++i)
            vars.push_back(base + std::to_string(i));
    RingDesc ring = RingDesc::fraction(vars);
    BulletTable t;
    HadamardMask m;
    for (std::size_t i = 0; i < 4; ++i) {
        t.gamma[i] = Scalar::parse(ring, vars[i]);
        t.delta[i] = Scalar::parse(ring, vars[4 + i]);
        m.epsilon[i] = Scalar::parse(ring, vars[8 + i]);
    }
    return rs_v2m2(t, m, ring);
}

AlgebraPtr b_22_symbolic() {
    RingDesc ring = RingDesc::fraction({"nu"});
    return b_22(Scalar::parse(ring, "nu"), ring);
}

AlgebraPtr b_44_symbolic() {
    RingDesc ring = RingDesc::fraction({"wa", "wb", "wc", "wd"});
    return b_44(WMatrix{Scalar::parse(ring, "wa"), Scalar::parse(ring, "wb"),
                        Scalar::parse(ring, "wc"), Scalar::parse(ring, "wd")},
                ring);
}

} // namespace rsalg
