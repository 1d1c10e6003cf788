#include "bnmod/pu_ring.hpp"

#include <stdexcept>

#include "bnmod/combinatorics.hpp"

namespace bnmod {

namespace {

void require_same_context(const PUContextPtr& a, const PUContextPtr& b) {
    if (!a || !b || !(*a == *b))
        throw std::invalid_argument("PU classes from different contexts");
}

Int pow_int(long base, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

PUContextPtr make_pu_context(int g, long N, long R, long K, int top_degree) {
    if (g < 1) throw std::invalid_argument("PU context: genus must be >= 1");
    if (N < 1) throw std::invalid_argument("PU context: N must be >= 1");
    if (K < 1) throw std::invalid_argument("PU context: K must be >= 1");
    // The Leray-Hirsch relation involves Theta^i up to i = g; the model is
    // only consistent when the stabilized rank carries all of them.
    if (R + K < g)
        throw std::invalid_argument(
            "PU context: stabilized rank R+K must be >= g");
    return std::make_shared<const PUContext>(PUContext{g, N, R, K, top_degree});
}

PUContextPtr make_pu_context(int g, long N, long R, long K) {
    return make_pu_context(g, N, R, K,
                           static_cast<int>(R + K - 1 + 2 * g));
}

PUClass PUClass::monomial(PUContextPtr ctx, int theta_deg, long xi_exp,
                          Rational c) {
    if (theta_deg < 0 || xi_exp < 0)
        throw std::invalid_argument("PU monomial: negative exponent");
    PUClass r(std::move(ctx));
    if (theta_deg <= r.ctx_->g) r.add_term(theta_deg, xi_exp, c);
    return r;
}

Rational PUClass::coefficient(int theta_deg, long xi_exp) const {
    auto it = terms_.find(xi_exp);
    if (it == terms_.end()) return 0;
    if (theta_deg < 0 || std::size_t(theta_deg) >= it->second.size()) return 0;
    return it->second[theta_deg];
}

void PUClass::add_term(int theta_deg, long xi_exp, const Rational& c) {
    if (c == 0) return;
    auto& poly = terms_[xi_exp];
    if (poly.size() <= std::size_t(theta_deg)) poly.resize(theta_deg + 1);
    poly[theta_deg] += c;
    // Trim so that zero classes compare equal structurally.
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.empty()) terms_.erase(xi_exp);
}

PUClass PUClass::unit() const {
    if (!ctx_) throw std::logic_error("unit of a context-less PU class");
    return monomial(ctx_, 0, 0, 1);
}

PUClass PUClass::operator-() const { return scaled(-1); }

PUClass PUClass::operator+(const PUClass& o) const {
    require_same_context(ctx_, o.ctx_);
    PUClass r = *this;
    for (const auto& [xi, poly] : o.terms_)
        for (std::size_t t = 0; t < poly.size(); ++t)
            r.add_term(static_cast<int>(t), xi, poly[t]);
    return r;
}

PUClass PUClass::operator-(const PUClass& o) const {
    require_same_context(ctx_, o.ctx_);
    PUClass r = *this;
    for (const auto& [xi, poly] : o.terms_)
        for (std::size_t t = 0; t < poly.size(); ++t)
            r.add_term(static_cast<int>(t), xi, -poly[t]);
    return r;
}

PUClass PUClass::scaled(const Rational& c) const {
    PUClass r(ctx_);
    if (c == 0) return r;
    for (const auto& [xi, poly] : terms_) {
        auto scaled_poly = poly;
        for (auto& q : scaled_poly) q *= c;
        r.terms_.emplace(xi, std::move(scaled_poly));
    }
    return r;
}

PUClass PUClass::operator*(const PUClass& o) const {
    require_same_context(ctx_, o.ctx_);
    const int g = ctx_->g;
    const int top = ctx_->top_degree;
    PUClass r(ctx_);
    for (const auto& [x1, p1] : terms_)
        for (const auto& [x2, p2] : o.terms_) {
            const long xi = x1 + x2;
            if (xi > top) continue;
            for (std::size_t t1 = 0; t1 < p1.size(); ++t1) {
                if (p1[t1] == 0) continue;
                for (std::size_t t2 = 0; t2 < p2.size(); ++t2) {
                    const int t = static_cast<int>(t1 + t2);
                    if (t > g || t + xi > top) continue;
                    r.add_term(t, xi, p1[t1] * p2[t2]);
                }
            }
        }
    return r;
}

bool PUClass::operator==(const PUClass& o) const { return terms_ == o.terms_; }

PUClass PUClass::component(int real_degree) const {
    PUClass r(ctx_);
    if (real_degree % 2 != 0 || real_degree < 0) return r;
    const int deg = real_degree / 2;
    for (const auto& [xi, poly] : terms_) {
        const long t = deg - xi;
        if (t >= 0 && std::size_t(t) < poly.size())
            r.add_term(static_cast<int>(t), xi, poly[t]);
    }
    return r;
}

long PUClass::max_xi_exponent() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

PUClass pu_unit(const PUContextPtr& ctx) {
    return PUClass::monomial(ctx, 0, 0, 1);
}
PUClass pu_theta(const PUContextPtr& ctx) {
    return PUClass::monomial(ctx, 1, 0, 1);
}
PUClass pu_xi(const PUContextPtr& ctx) {
    return PUClass::monomial(ctx, 0, 1, 1);
}

PUClass reduce_leray_hirsch(const PUClass& u) {
    const auto& ctx = u.context();
    const long rel_deg = ctx->R + ctx->K;  // xi^{rel_deg} is the leading term
    PUClass r = u;
    while (r.max_xi_exponent() >= rel_deg) {
        const long e = r.max_xi_exponent();
        const auto poly = r.terms().rbegin()->second;
        // Remove the leading xi^e Theta-polynomial, then substitute
        // xi^{R+K} -> sum_{i>=1} (-1)^{i+1} (N^i/i!) Theta^i xi^{R+K-i}.
        for (std::size_t t = 0; t < poly.size(); ++t)
            if (poly[t] != 0)
                r = r - PUClass::monomial(ctx, static_cast<int>(t), e, poly[t]);
        for (long i = 1; i <= ctx->g; ++i) {
            Rational ci((i % 2 == 0) ? -pow_int(ctx->N, i) : pow_int(ctx->N, i),
                        factorial(i));
            for (std::size_t t = 0; t < poly.size(); ++t) {
                const long td = static_cast<long>(t) + i;
                if (td > ctx->g || poly[t] == 0) continue;
                r = r + PUClass::monomial(ctx, static_cast<int>(td),
                                          e - rel_deg + (rel_deg - i),
                                          ci * poly[t]);
            }
        }
    }
    return r;
}

std::vector<Rational> pushforward_xi(const PUContextPtr& ctx, long j) {
    if (j < 0) throw std::invalid_argument("pushforward_xi: negative power");
    const long r = j - ctx->fiber_dim();
    if (r < 0 || r > ctx->g) return {};
    std::vector<Rational> poly(r + 1, Rational(0));
    poly[r] = Rational(pow_int(ctx->N, r), factorial(r));
    return poly;
}

Rational integrate_PU_via_pushforward(const PUClass& u) {
    const auto& ctx = u.context();
    Rational theta_g_coef = 0;
    for (const auto& [xi, poly] : u.terms()) {
        const auto push = pushforward_xi(ctx, xi);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            const long r = ctx->g - static_cast<long>(t);
            if (r >= 0 && std::size_t(r) < push.size())
                theta_g_coef += poly[t] * push[r];
        }
    }
    return theta_g_coef * factorial(ctx->g);
}

Rational integrate_PU_via_reduction(const PUClass& u) {
    const auto& ctx = u.context();
    const PUClass reduced = reduce_leray_hirsch(u);
    return reduced.coefficient(ctx->g, ctx->fiber_dim()) * factorial(ctx->g);
}

Rational integrate_PU(const PUClass& u) {
    const Rational a = integrate_PU_via_pushforward(u);
    const Rational b = integrate_PU_via_reduction(u);
    if (a != b)
        throw ConsistencyError("integrate_PU route disagreement: pushforward=" +
                               a.str() + " reduction=" + b.str());
    return a;
}

}  // namespace bnmod
