#pragma once

#include <array>

#include "rsalg/algebra.hpp"

namespace rsalg {

// bilinear "bullet" product on V_2: e_s • e_t = (gamma_m, delta_m) with
// m enumerating (s,t) as (1,1),(1,2),(2,1),(2,2)
struct BulletTable {
    std::array<Scalar, 4> gamma;
    std::array<Scalar, 4> delta;
};

// entries of the mask matrix C, row major
struct HadamardMask {
    std::array<Scalar, 4> epsilon;
};

// entries of the 2x2 parameter matrix w, row major; trace must be
// invertible
struct WMatrix {
    Scalar a, b, c, d;
};

// F^n + M_n(F) with v.A = vA, A.v = vA + [A, diag(v)]
AlgebraPtr matrix_rs(std::size_t n, const RingDesc& ring);

// V_2 + M_2(F) with A.v = vA + [A, R(v)] and w.u = w•u + psi_C(u) pi(w)
AlgebraPtr rs_v2m2(const BulletTable& bullet, const HadamardMask& mask, const RingDesc& ring);

// superalgebra on F^n + [F^n] with [x].y = [x o tau(y)], tau the cyclic
// coordinate shift
AlgebraPtr b_nn(std::size_t n, const RingDesc& ring);

// superalgebra on (F + F) + [F + F] with [x].[y] = x o chi(y) and
// [x].y = [x o y*]
AlgebraPtr b_22(const Scalar& nu, const RingDesc& ring);

// superalgebra on M_2(F) + [M_2(F)] twisted by w
AlgebraPtr b_44(const WMatrix& w, const RingDesc& ring);

// fully generic instances over the fraction field of their parameters:
// gamma1..4 / delta1..4 / epsilon1..4, nu, and wa/wb/wc/wd
AlgebraPtr rs_v2m2_symbolic();
AlgebraPtr b_22_symbolic();
AlgebraPtr b_44_symbolic();

} // namespace rsalg
