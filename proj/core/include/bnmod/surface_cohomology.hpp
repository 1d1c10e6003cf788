#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bnmod/rational.hpp"

namespace bnmod {

// Exact model of the graded-commutative ring H*(X x J), where X is a
// compact genus-g surface and J its Jacobian torus.
//
// The X factor is the 2g+2 dimensional ring with basis
// {1, alpha_1..alpha_g, beta_1..beta_g, sigma} subject to
// alpha_i alpha_j = beta_i beta_j = 0, alpha_i beta_j = delta_ij sigma and
// sigma annihilating everything of positive X-degree. The J factor is the
// full exterior algebra on a_1..a_g, b_1..b_g. Koszul signs apply across
// the tensor product.
//
// A basis monomial is stored as an X-part (at most one of alpha_i, beta_i,
// sigma) followed by a canonically ordered product of J generators
// a_1 b_1 a_2 b_2 ... (interleaved bit order). Any class constructed by
// ring operations is sign-normalized to this form.
class SurfaceProductModel;
using ModelPtr = std::shared_ptr<const SurfaceProductModel>;

struct Monomial {
    // 0 = unit, 1..g = alpha_i, g+1..2g = beta_i, kSigma = sigma.
    static constexpr std::uint8_t kSigma = 255;
    std::uint8_t xpart = 0;
    std::uint32_t jmask = 0;  // bit 2(i-1) = a_i, bit 2(i-1)+1 = b_i

    auto operator<=>(const Monomial&) const = default;
};

class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(ModelPtr model) : model_(std::move(model)) {}

    static GradedClass term(ModelPtr model, Monomial m, Rational c);

    const ModelPtr& model() const { return model_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coefficient(Monomial m) const;

    GradedClass unit() const;  // 1 in the same ambient ring

    GradedClass operator-() const;
    GradedClass operator+(const GradedClass& o) const;
    GradedClass operator-(const GradedClass& o) const;
    GradedClass operator*(const GradedClass& o) const;
    GradedClass scaled(const Rational& c) const;

    bool operator==(const GradedClass& o) const;

    // Homogeneous part of the given real (cohomological) degree.
    GradedClass component(int real_degree) const;
    int top_real_degree() const;

private:
    void add_term(Monomial m, const Rational& c);

    ModelPtr model_;
    std::map<Monomial, Rational> terms_;

    friend class SurfaceProductModel;
};

class SurfaceProductModel
    : public std::enable_shared_from_this<SurfaceProductModel> {
public:
    int genus() const { return g_; }
    // Real degree of the top class sigma a_1 b_1 ... a_g b_g.
    int top_degree() const { return 2 + 2 * g_; }

    GradedClass zero() const;
    GradedClass unit() const;
    GradedClass sigma() const;
    GradedClass alpha(int i) const;  // 1-based
    GradedClass beta(int i) const;
    GradedClass a(int i) const;
    GradedClass b(int i) const;
    GradedClass theta() const;  // sum_i a_i b_i

    static int monomial_degree(const Monomial& m);

private:
    explicit SurfaceProductModel(int g) : g_(g) {}
    int g_;

    friend ModelPtr make_product_model(int g);
};

// Builds the genus-g product model. Rejects g < 1 and g > 6 (the full
// basis has (2g+2) 4^g monomials; larger genus must use the Theta
// polynomial model in pu_ring).
ModelPtr make_product_model(int g);

// sum_{k>=0} u^k / k!; u must have no degree-0 part and only even-degree
// components.
GradedClass exp_truncated(const GradedClass& u);

// Integration along the X factor: extracts the coefficient class of sigma,
// killing every term of X-degree != 2. The result has trivial X-part.
GradedClass integrate_fiber_X(const GradedClass& u);

// Integration over J: coefficient of the canonically ordered top monomial
// a_1 b_1 ... a_g b_g. The argument must have trivial X-part.
Rational integrate_J(const GradedClass& u);

}  // namespace bnmod
