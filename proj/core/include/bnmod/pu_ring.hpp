#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bnmod/rational.hpp"

namespace bnmod {

// The cohomology of the projectivized stabilized-kernel bundle PU over the
// Jacobian, in its Theta polynomial form: classes are polynomials in Theta
// (nilpotent, Theta^{g+1} = 0) and xi, truncated at a fixed total complex
// degree. Powers of xi at or above R+K are legitimate formal
// representatives; they can be reduced by the Leray-Hirsch relation or
// integrated directly through the pushforward formula, and the two routes
// are asserted to agree.
struct PUContext {
    int g;
    long N;
    long R;
    long K;
    int top_degree;  // complex; products are truncated above this

    long fiber_dim() const { return R + K - 1; }
    bool operator==(const PUContext& o) const = default;
};

using PUContextPtr = std::shared_ptr<const PUContext>;

// Default truncation keeps everything that can contribute to an integral
// over PU: Theta-degree <= g and pushforward degree drop R+K-1.
PUContextPtr make_pu_context(int g, long N, long R, long K);
PUContextPtr make_pu_context(int g, long N, long R, long K, int top_degree);

class PUClass {
public:
    PUClass() = default;
    explicit PUClass(PUContextPtr ctx) : ctx_(std::move(ctx)) {}

    // c * Theta^theta_deg * xi^xi_exp (no truncation applied here).
    static PUClass monomial(PUContextPtr ctx, int theta_deg, long xi_exp,
                            Rational c);

    const PUContextPtr& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    // xi exponent -> Theta coefficient vector (index = Theta degree).
    const std::map<long, std::vector<Rational>>& terms() const {
        return terms_;
    }
    Rational coefficient(int theta_deg, long xi_exp) const;

    PUClass unit() const;
    PUClass operator-() const;
    PUClass operator+(const PUClass& o) const;
    PUClass operator-(const PUClass& o) const;
    PUClass operator*(const PUClass& o) const;
    PUClass scaled(const Rational& c) const;
    bool operator==(const PUClass& o) const;

    PUClass component(int real_degree) const;
    int top_real_degree() const { return 2 * ctx_->top_degree; }

    long max_xi_exponent() const;

private:
    void add_term(int theta_deg, long xi_exp, const Rational& c);

    PUContextPtr ctx_;
    std::map<long, std::vector<Rational>> terms_;
};

PUClass pu_unit(const PUContextPtr& ctx);
PUClass pu_theta(const PUContextPtr& ctx);
PUClass pu_xi(const PUContextPtr& ctx);

// Substitutes xi^{R+K} = -sum_{i>=1} c_i(U) xi^{R+K-i}, with
// c_i(U) = (-1)^i N^i Theta^i / i!, until every xi exponent is < R+K.
PUClass reduce_leray_hirsch(const PUClass& u);

// p_*(xi^j): zero for j < R+K-1, and N^r Theta^r / r! for
// j = R+K-1+r (zero once r > g). Returned as a Theta coefficient vector.
std::vector<Rational> pushforward_xi(const PUContextPtr& ctx, long j);

// Integration over PU, computed by two independent routes (termwise
// pushforward, and full Leray-Hirsch reduction); disagreement raises
// ConsistencyError.
Rational integrate_PU(const PUClass& u);

Rational integrate_PU_via_pushforward(const PUClass& u);
Rational integrate_PU_via_reduction(const PUClass& u);

}  // namespace bnmod
