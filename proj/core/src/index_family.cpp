#include "bnmod/index_family.hpp"

#include <numeric>
#include <stdexcept>

#include "bnmod/char_calculus.hpp"
#include "bnmod/combinatorics.hpp"

namespace bnmod {

namespace {

long ceil_div(long a, long b) {
    // b > 0
    long q = a / b, r = a % b;
    return q + ((r != 0 && (r > 0) == (b > 0)) ? 1 : 0);
}

Int pow_int(long base, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// Index character of the Dolbeault family on one degree-m Poincare line
// bundle: integrate_X(ch(P_m) Td(X)) = (m + 1 - g) - Theta.
GradedClass tau(long m, const ModelPtr& model) {
    const long g = model->genus();
    const GradedClass td_x =
        model->unit() - model->sigma().scaled(Rational(g - 1));
    return integrate_fiber_X(exp_truncated(poincare_c1(m, model)) * td_x);
}

}  // namespace

long ModuliParams::default_K() const {
    const long R = index_rank();
    return std::max({1L, 1 - R, g + 1 - R, ceil_div(R + g + 1, N) + 1});
}

void ModuliParams::validate() const {
    if (g < 1) throw std::invalid_argument("genus must be >= 1");
    if (N < 1) throw std::invalid_argument("rank N must be >= 1");
}

GradedClass poincare_c1(long m, const ModelPtr& model) {
    GradedClass c = model->sigma().scaled(Rational(m));
    for (int i = 1; i <= model->genus(); ++i)
        c = c + model->a(i) * model->alpha(i) + model->b(i) * model->beta(i);
    return c;
}

GradedClass ch_index_split(const ModuliParams& p, const ModelPtr& model,
                           const std::vector<long>& line_degrees) {
    p.validate();
    if (static_cast<long>(line_degrees.size()) != p.N)
        throw std::invalid_argument("decomposition must have N summands");
    if (std::accumulate(line_degrees.begin(), line_degrees.end(), 0L) != p.D)
        throw std::invalid_argument("decomposition degrees must sum to D");
    GradedClass ch = model->zero();
    for (long deg : line_degrees) ch = ch + tau(p.d + deg, model);
    return ch;
}

GradedClass ch_index_full(const ModuliParams& p, const ModelPtr& model) {
    std::vector<long> degrees(p.N, 0);
    degrees.back() = p.D;
    return ch_index_split(p, model, degrees);
}

GradedClass ch_index_closed(const ModuliParams& p, const ModelPtr& model) {
    return model->unit().scaled(Rational(p.index_rank())) -
           model->theta().scaled(Rational(p.N));
}

GradedClass chern_index_closed(const ModuliParams& p, const ModelPtr& model) {
    GradedClass c = model->zero();
    GradedClass theta_pow = model->unit();
    for (long r = 0; r <= model->genus(); ++r) {
        Rational coef((r % 2 == 0) ? pow_int(p.N, r) : -pow_int(p.N, r),
                      factorial(r));
        c = c + theta_pow.scaled(coef);
        theta_pow = theta_pow * model->theta();
    }
    return c;
}

GradedClass chern_index(const ModuliParams& p, const ModelPtr& model) {
    VirtualBundle<GradedClass> index{Int(p.index_rank()),
                                     ch_index_full(p, model)};
    const GradedClass c = chern_from_character(index);
    const GradedClass closed = chern_index_closed(p, model);
    if (!(c == closed))
        throw ConsistencyError(
            "index Chern classes: Newton pipeline disagrees with closed form");
    return c;
}

PUClass tangent_chern(const ModuliParams& p, const PUContextPtr& ctx, long k) {
    if (k < 0) throw std::invalid_argument("tangent_chern: negative degree");
    const long R = p.index_rank();
    PUClass c(ctx);
    for (long l = 0; l <= std::min<long>(k, p.g); ++l) {
        Rational coef = binom_general(R - l, k - l) *
                        Rational((l % 2 == 0) ? pow_int(p.N, l)
                                              : -pow_int(p.N, l),
                                 factorial(l));
        if (coef != 0)
            c = c + PUClass::monomial(ctx, static_cast<int>(l), k - l, coef);
    }
    return c;
}

PUClass tangent_chern_via_twist(const ModuliParams& p, const PUContextPtr& ctx,
                                long k) {
    const long R = p.index_rank();
    // ch(ind) pulled back to PU: R - N Theta.
    PUClass ch = pu_unit(ctx).scaled(Rational(R)) -
                 pu_theta(ctx).scaled(Rational(p.N));
    VirtualBundle<PUClass> index{Int(R), ch};
    return twist_total_chern(pu_xi(ctx), index).component(2 * k);
}

}  // namespace bnmod
