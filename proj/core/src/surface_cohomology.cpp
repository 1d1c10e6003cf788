#include "bnmod/surface_cohomology.hpp"

#include <bit>
#include <stdexcept>

namespace bnmod {

namespace {

void require_same_model(const ModelPtr& a, const ModelPtr& b) {
    if (!a || !b || a.get() != b.get())
        throw std::invalid_argument("graded classes from different ring models");
}

// Number of transpositions needed to merge the generators of m2 (appended
// after m1) into canonical bit order.
int merge_inversions(std::uint32_t m1, std::uint32_t m2) {
    int inv = 0;
    while (m2) {
        int s = std::countr_zero(m2);
        m2 &= m2 - 1;
        inv += std::popcount(m1 >> (s + 1));
    }
    return inv;
}

bool xpart_is_odd(std::uint8_t x) { return x != 0 && x != Monomial::kSigma; }

// Product of two X-factor basis elements; returns false when zero.
// sign is +-1, result is one of {unit, alpha, beta, sigma}.
bool multiply_xparts(int g, std::uint8_t x1, std::uint8_t x2,
                     std::uint8_t& out, int& sign) {
    sign = 1;
    if (x1 == 0) { out = x2; return true; }
    if (x2 == 0) { out = x1; return true; }
    if (x1 == Monomial::kSigma || x2 == Monomial::kSigma) return false;
    bool a1 = x1 <= g, a2 = x2 <= g;
    int i1 = a1 ? x1 : x1 - g;
    int i2 = a2 ? x2 : x2 - g;
    if (a1 == a2 || i1 != i2) return false;
    out = Monomial::kSigma;
    sign = a1 ? 1 : -1;  // alpha_i beta_i = sigma, beta_i alpha_i = -sigma
    return true;
}

}  // namespace

GradedClass GradedClass::term(ModelPtr model, Monomial m, Rational c) {
    GradedClass r(std::move(model));
    r.add_term(m, c);
    return r;
}

Rational GradedClass::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

GradedClass GradedClass::unit() const {
    if (!model_) throw std::logic_error("unit of a model-less class");
    return term(model_, Monomial{}, 1);
}

void GradedClass::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GradedClass GradedClass::operator-() const {
    GradedClass r(model_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedClass GradedClass::operator+(const GradedClass& o) const {
    require_same_model(model_, o.model_);
    GradedClass r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GradedClass GradedClass::operator-(const GradedClass& o) const {
    require_same_model(model_, o.model_);
    GradedClass r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

GradedClass GradedClass::scaled(const Rational& c) const {
    GradedClass r(model_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

GradedClass GradedClass::operator*(const GradedClass& o) const {
    require_same_model(model_, o.model_);
    const int g = model_->genus();
    GradedClass r(model_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            if (m1.jmask & m2.jmask) continue;
            int sign = 1;
            // Move the X-part of m2 left across the J-part of m1.
            if (xpart_is_odd(m2.xpart) && (std::popcount(m1.jmask) & 1))
                sign = -sign;
            std::uint8_t x;
            int xsign;
            if (!multiply_xparts(g, m1.xpart, m2.xpart, x, xsign)) continue;
            sign *= xsign;
            if (merge_inversions(m1.jmask, m2.jmask) & 1) sign = -sign;
            r.add_term(Monomial{x, m1.jmask | m2.jmask}, c1 * c2 * sign);
        }
    }
    return r;
}

bool GradedClass::operator==(const GradedClass& o) const {
    return terms_ == o.terms_;
}

GradedClass GradedClass::component(int real_degree) const {
    GradedClass r(model_);
    for (const auto& [m, c] : terms_)
        if (SurfaceProductModel::monomial_degree(m) == real_degree)
            r.terms_.emplace(m, c);
    return r;
}

int GradedClass::top_real_degree() const { return model_->top_degree(); }

int SurfaceProductModel::monomial_degree(const Monomial& m) {
    int d = std::popcount(m.jmask);
    if (m.xpart == Monomial::kSigma) d += 2;
    else if (m.xpart != 0) d += 1;
    return d;
}

GradedClass SurfaceProductModel::zero() const {
    return GradedClass(shared_from_this());
}

GradedClass SurfaceProductModel::unit() const {
    return GradedClass::term(shared_from_this(), Monomial{}, 1);
}

GradedClass SurfaceProductModel::sigma() const {
    return GradedClass::term(shared_from_this(), Monomial{Monomial::kSigma, 0},
                             1);
}

GradedClass SurfaceProductModel::alpha(int i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("alpha index out of range");
    return GradedClass::term(shared_from_this(),
                             Monomial{std::uint8_t(i), 0}, 1);
}

GradedClass SurfaceProductModel::beta(int i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("beta index out of range");
    return GradedClass::term(shared_from_this(),
                             Monomial{std::uint8_t(g_ + i), 0}, 1);
}

GradedClass SurfaceProductModel::a(int i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("a index out of range");
    return GradedClass::term(shared_from_this(),
                             Monomial{0, 1u << (2 * (i - 1))}, 1);
}

GradedClass SurfaceProductModel::b(int i) const {
    if (i < 1 || i > g_) throw std::invalid_argument("b index out of range");
    return GradedClass::term(shared_from_this(),
                             Monomial{0, 1u << (2 * (i - 1) + 1)}, 1);
}

GradedClass SurfaceProductModel::theta() const {
    GradedClass r(shared_from_this());
    for (int i = 1; i <= g_; ++i) r = r + a(i) * b(i);
    return r;
}

ModelPtr make_product_model(int g) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    if (g > 6)
        throw std::invalid_argument(
            "product model capped at genus 6; use the Theta polynomial model");
    return ModelPtr(new SurfaceProductModel(g));
}

GradedClass exp_truncated(const GradedClass& u) {
    if (!u.component(0).is_zero())
        throw std::invalid_argument("exp_truncated: nonzero degree-0 part");
    for (int d = 1; d <= u.top_real_degree(); d += 2)
        if (!u.component(d).is_zero())
            throw std::invalid_argument("exp_truncated: odd-degree component");
    GradedClass result = u.unit();
    GradedClass term = u.unit();
    Rational kfact = 1;
    for (int k = 1; k <= u.top_real_degree() / 2 + 1 && !term.is_zero(); ++k) {
        term = term * u;
        kfact *= k;
        result = result + term.scaled(Rational(1) / kfact);
    }
    return result;
}

GradedClass integrate_fiber_X(const GradedClass& u) {
    GradedClass r(u.model());
    for (const auto& [m, c] : u.terms())
        if (m.xpart == Monomial::kSigma)
            r = r + GradedClass::term(u.model(), Monomial{0, m.jmask}, c);
    return r;
}

Rational integrate_J(const GradedClass& u) {
    const int g = u.model()->genus();
    const std::uint32_t full = (g == 16) ? ~0u : ((1u << (2 * g)) - 1);
    for (const auto& [m, c] : u.terms())
        if (m.xpart != 0)
            throw std::invalid_argument(
                "integrate_J: class has nontrivial X-part");
    return u.coefficient(Monomial{0, full});
}

}  // namespace bnmod
