#pragma once

// Test-only ring: polynomials over Q in a handful of nilpotent variables
// (formal Chern roots), truncated at a fixed total degree. Used as the
// independent splitting-principle oracle for the characteristic-class
// calculus; deliberately unrelated to the library's own ring kernels.

#include <array>
#include <map>
#include <memory>
#include <numeric>

#include "bnmod/rational.hpp"

namespace testring {

constexpr int kMaxVars = 6;
using Expo = std::array<int, kMaxVars>;

class RootPoly {
public:
    RootPoly() = default;
    explicit RootPoly(int top) : top_(top) {}

    static RootPoly variable(int top, int i) {
        RootPoly r(top);
        Expo e{};
        e[i] = 1;
        r.terms_[e] = 1;
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    RootPoly unit() const {
        RootPoly r(top_);
        r.terms_[Expo{}] = 1;
        return r;
    }
    int top_real_degree() const { return 2 * top_; }

    RootPoly operator+(const RootPoly& o) const {
        RootPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add(e, c);
        return r;
    }
    RootPoly operator-(const RootPoly& o) const {
        RootPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add(e, -c);
        return r;
    }
    RootPoly operator*(const RootPoly& o) const {
        RootPoly r(top_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e{};
                int deg = 0;
                for (int i = 0; i < kMaxVars; ++i)
                    deg += (e[i] = e1[i] + e2[i]);
                if (deg <= top_) r.add(e, c1 * c2);
            }
        return r;
    }
    RootPoly scaled(const bnmod::Rational& c) const {
        RootPoly r(top_);
        if (c == 0) return r;
        for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
        return r;
    }
    bool operator==(const RootPoly& o) const { return terms_ == o.terms_; }

    RootPoly component(int real_degree) const {
        RootPoly r(top_);
        if (real_degree % 2 != 0) return r;
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == real_degree / 2)
                r.terms_[e] = c;
        return r;
    }

private:
    void add(const Expo& e, const bnmod::Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int top_ = 0;
    std::map<Expo, bnmod::Rational> terms_;
};

}  // namespace testring
