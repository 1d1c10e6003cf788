#pragma once

#include <vector>

#include "bnmod/pu_ring.hpp"
#include "bnmod/rational.hpp"
#include "bnmod/surface_cohomology.hpp"

namespace bnmod {

// Parameters of the moduli space: genus g of the curve, rank N and degree
// D of the background bundle, degree d of the line bundle.
struct ModuliParams {
    long g = 1;
    long N = 1;
    long D = 0;
    long d = 0;

    long index_rank() const { return N * (d + 1 - g) + D; }  // R
    long dimension() const { return index_rank() + g - 1; }  // m
    bool empty() const { return dimension() < 0; }

    // Stabilization count. Large enough that the stabilized kernel bundle
    // carries the whole Leray-Hirsch relation (R + K >= g + 1) and that
    // the degeneracy-locus ranks NK and NK - R stay positive with margin
    // NK - R >= g + 1. Every public result is invariant under enlarging K.
    long default_K() const;

    void validate() const;  // throws std::invalid_argument
};

// c_1 of the degree-m Poincare line bundle on X x J:
// m sigma + sum_i (a_i alpha_i + b_i beta_i).
GradedClass poincare_c1(long m, const ModelPtr& model);

// Chern character of the index of the family of Dolbeault operators,
// computed through the full product-model pipeline: the background bundle
// is taken holomorphically decomposable as O^{N-1} + (degree-D line
// bundle), and each summand contributes the fiber integral of
// ch(P_m) Td(X). Equals R - N Theta.
GradedClass ch_index_full(const ModuliParams& p, const ModelPtr& model);

// Same index character for an arbitrary decomposition of the background
// bundle into line bundles of the given degrees (must sum to D and have
// N entries). Homotopy invariance of the index makes this independent of
// the decomposition.
GradedClass ch_index_split(const ModuliParams& p, const ModelPtr& model,
                           const std::vector<long>& line_degrees);

// The closed form R - N Theta.
GradedClass ch_index_closed(const ModuliParams& p, const ModelPtr& model);

// Total Chern class of the index bundle via Newton's identities applied
// to ch_index_full; asserted equal to the closed form
// sum_r (-1)^r N^r Theta^r / r! (ConsistencyError on mismatch).
GradedClass chern_index(const ModuliParams& p, const ModelPtr& model);
GradedClass chern_index_closed(const ModuliParams& p, const ModelPtr& model);

// k-th Chern class of O_PU(1) tensor (pullback of the index bundle):
// sum_{l=0}^{min(k,g)} C(R-l, k-l) (-1)^l (N^l/l!) Theta^l xi^{k-l}.
PUClass tangent_chern(const ModuliParams& p, const PUContextPtr& ctx, long k);

// Same class via the generic twist formula; used as the independent route.
PUClass tangent_chern_via_twist(const ModuliParams& p, const PUContextPtr& ctx,
                                long k);

}  // namespace bnmod
