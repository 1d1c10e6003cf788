#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bnmod/index_family.hpp"
#include "bnmod/rational.hpp"

namespace bnmod {

// Betti numbers b_0..b_{2m} of the moduli space.
struct BettiTable {
    std::vector<Int> b;

    Int euler() const;
    long top_index() const { return static_cast<long>(b.size()) - 1; }
};

// Hodge numbers h^{p,q} for 0 <= p,q <= m.
struct HodgeTable {
    long m = 0;
    std::vector<std::vector<Int>> h;  // h[p][q]

    Int row_sum(long r) const;  // sum over p+q = r
};

struct SpectralData {
    Int delta;
    Int genus_Y;
    bool dim_consistency;
};

// Complex dimension m = R + g - 1 (may be negative; negative means the
// moduli space is empty and all invariants below are zero).
long dimension(const ModuliParams& p);

// Euler characteristic, computed by both the closed form
// (-1)^m N^g C(2g-2, m) and the PU integral route, asserted equal.
Int euler_characteristic(const ModuliParams& p);
Int euler_closed(const ModuliParams& p);
Int euler_integral(const ModuliParams& p, long K);

// Betti numbers: Lambda(g, r) away from the middle degree, and in the
// middle the value forced by Poincare duality and the Euler
// characteristic.
BettiTable betti_table(const ModuliParams& p);

// The middle Betti number as literally printed (sum running to j = r);
// kept for comparison, it disagrees with Poincare duality (see
// betti_table) at e.g. g=2, N=2, D=0, d=1.
Int middle_betti_printed(const ModuliParams& p);

// Poincare polynomial coefficients (identical data to betti_table).
std::vector<Int> poincare_polynomial(const ModuliParams& p);

// Poincare polynomial of Sym^n of a genus-g curve from the classical
// generating function (1+xt)^{2g} / ((1-x)(1-x t^2)). Independent oracle
// for the N = 1 case.
std::vector<Int> macdonald_oracle(long g, long n);

// Holomorphic Euler characteristic chi(Omega^p) via Riemann-Roch on PU.
Int chi_omega_p(const ModuliParams& p, long pw, long K);

// Full Hodge table: off-middle rows from the projective-bundle formula
// sum_r C(g, p-r) C(g, q-r) and duality, middle anti-diagonal from the
// chi(Omega^p). Desk-scale limits g <= 3, m <= 8 unless force is set.
HodgeTable hodge_table(const ModuliParams& p,
                       std::optional<long> K = std::nullopt,
                       bool force = false);

// Off-middle value sum_r C(g, p-r) C(g, q-r) (valid when p + q != m).
Int hodge_off_middle(long g, long m, long p, long q);

// Fulton-Lazarsfeld connectedness bound g - (v-k)(w-k) with v = NK,
// w = NK - R, k = NK - 1; requires w > 0. Always equals the dimension.
long fl_bound(const ModuliParams& p, long K);

// delta = D + N(N-1)(g-1), g_Y = N^2(g-1)+1, and the fiber-square
// dimension identity (delta + Nd) - (g_Y - g) = m.
SpectralData spectral_numerology(const ModuliParams& p);

}  // namespace bnmod
