/*
   Copyright 2026 The skewcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file skewpoly.hpp
 * @brief Skew polynomials R[x; Theta] with x a = Theta(a) x.
 *
 * SkewPoly is a plain coefficient container; every operation that depends on the twist
 * takes the automorphism explicitly. Division requires a unit leading coefficient of the
 * divisor and throws std::domain_error otherwise.
 *
 * Residue-field polynomials in F_{p^m}[x; theta] are SkewPoly<FpmURing> values whose
 * coefficients have zero u-part.
 */

#ifndef SKEWCODES_SKEWPOLY_HPP
#define SKEWCODES_SKEWPOLY_HPP

#include <algorithm>
#include <climits>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chainring.hpp"

namespace skewcodes {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kNegInf = INT_MIN;

template <chain_ring Ring>
class SkewPoly {
   public:
    using ring_type = Ring;
    using element_type = typename Ring::element_type;

    explicit SkewPoly(Ring ring) : ring_(std::move(ring)) {}
    SkewPoly(Ring ring, std::vector<element_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

    static SkewPoly constant(const Ring& ring, const element_type& a) { return {ring, {a}}; }
    static SkewPoly monomial(const Ring& ring, const element_type& a, int i) {
        std::vector<element_type> c(static_cast<std::size_t>(i) + 1, ring.zero());
        c[i] = a;
        return {ring, std::move(c)};
    }
    static SkewPoly x(const Ring& ring, int i = 1) { return monomial(ring, ring.one(), i); }

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<element_type>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    element_type coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : ring_.zero();
    }
    element_type leading() const { return c_.empty() ? ring_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == ring_.one(); }

    void set_coeff(int i, const element_type& a) {
        if (i < 0) throw std::out_of_range("negative coefficient index");
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1, ring_.zero());
        c_[i] = a;
        trim();
    }

    friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
        std::vector<element_type> c(std::max(f.c_.size(), g.c_.size()), f.ring_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(int(i)) + g.coeff(int(i));
        return {f.ring_, std::move(c)};
    }
    friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
        std::vector<element_type> c(std::max(f.c_.size(), g.c_.size()), f.ring_.zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(int(i)) - g.coeff(int(i));
        return {f.ring_, std::move(c)};
    }
    SkewPoly operator-() const {
        std::vector<element_type> c(c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
        return {ring_, std::move(c)};
    }
    /// Left multiplication by a constant: a * sum f_i x^i = sum (a f_i) x^i.
    friend SkewPoly operator*(const element_type& a, const SkewPoly& f) {
        std::vector<element_type> c(f.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * f.c_[i];
        return {f.ring_, std::move(c)};
    }

    friend bool operator==(const SkewPoly& f, const SkewPoly& g) { return f.ring_ == g.ring_ && f.c_ == g.c_; }

   private:
    void trim() {
        const auto z = ring_.zero();
        while (!c_.empty() && c_.back() == z) c_.pop_back();
    }

    Ring ring_;
    std::vector<element_type> c_;
};

/// Orders by degree, then lexicographically on (c0, c1, ...) by ring index.
template <chain_ring Ring>
std::strong_ordering compare(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
    if (auto c = f.degree() <=> g.degree(); c != 0) return c;
    const auto& ring = f.ring();
    for (int i = 0; i <= f.degree(); ++i)
        if (auto c = ring.index(f.coeff(i)) <=> ring.index(g.coeff(i)); c != 0) return c;
    return std::strong_ordering::equal;
}

template <chain_ring Ring>
struct SkewPolyLess {
    bool operator()(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) const { return compare(f, g) < 0; }
};

/// (a x^i)(b x^j) = a Theta^i(b) x^{i+j}.
template <chain_ring Ring>
SkewPoly<Ring> skew_mul(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g, const typename Ring::automorphism_type& t) {
    const Ring& ring = f.ring();
    if (f.is_zero() || g.is_zero()) return SkewPoly<Ring>(ring);
    std::vector<typename Ring::element_type> c(f.coeffs().size() + g.coeffs().size() - 1, ring.zero());
    for (int i = 0; i <= f.degree(); ++i) {
        const auto& a = f.coeffs()[i];
        if (a == ring.zero()) continue;
        for (int j = 0; j <= g.degree(); ++j) c[i + j] += a * ring.apply(t, g.coeffs()[j], i);
    }
    return {ring, std::move(c)};
}

template <chain_ring Ring>
SkewPoly<Ring> skew_pow(const SkewPoly<Ring>& f, int e, const typename Ring::automorphism_type& t) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    auto r = SkewPoly<Ring>::constant(f.ring(), f.ring().one());
    for (int i = 0; i < e; ++i) r = skew_mul(r, f, t);
    return r;
}

template <chain_ring Ring>
struct DivResult {
    SkewPoly<Ring> q;
    SkewPoly<Ring> r;
};

namespace detail {

template <chain_ring Ring>
void require_unit_leading(const SkewPoly<Ring>& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (!g.ring().is_unit(g.leading())) throw std::domain_error("divisor leading coefficient is not a unit");
}

}  // namespace detail

/// f = q g + r with deg r < deg g.
template <chain_ring Ring>
DivResult<Ring> right_divmod(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g,
                             const typename Ring::automorphism_type& t) {
    detail::require_unit_leading(g);
    const Ring& ring = f.ring();
    const auto binv = ring.inverse(g.leading());
    SkewPoly<Ring> q(ring);
    SkewPoly<Ring> r = f;
    while (r.degree() >= g.degree()) {
        const int d = r.degree() - g.degree();
        const auto mono = SkewPoly<Ring>::monomial(ring, r.leading() * ring.apply(t, binv, d), d);
        q = q + mono;
        r = r - skew_mul(mono, g, t);
    }
    return {std::move(q), std::move(r)};
}

/// f = g q + r with deg r < deg g.
template <chain_ring Ring>
DivResult<Ring> left_divmod(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g,
                            const typename Ring::automorphism_type& t) {
    detail::require_unit_leading(g);
    const Ring& ring = f.ring();
    const auto binv = ring.inverse(g.leading());
    SkewPoly<Ring> q(ring);
    SkewPoly<Ring> r = f;
    while (r.degree() >= g.degree()) {
        const int d = r.degree() - g.degree();
        const auto mono = SkewPoly<Ring>::monomial(ring, ring.apply(t, r.leading() * binv, -g.degree()), d);
        q = q + mono;
        r = r - skew_mul(g, mono, t);
    }
    return {std::move(q), std::move(r)};
}

template <chain_ring Ring>
bool is_right_divisor(const SkewPoly<Ring>& g, const SkewPoly<Ring>& f, const typename Ring::automorphism_type& t) {
    return right_divmod(f, g, t).r.is_zero();
}

/// The q with f = q g; throws std::domain_error if g does not right-divide f.
template <chain_ring Ring>
SkewPoly<Ring> right_quotient(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g,
                              const typename Ring::automorphism_type& t) {
    auto [q, r] = right_divmod(f, g, t);
    if (!r.is_zero()) throw std::domain_error("polynomial is not a right divisor");
    return q;
}

/// Commutes with x and with every constant of the ring.
template <chain_ring Ring>
bool is_central(const SkewPoly<Ring>& f, const typename Ring::automorphism_type& t) {
    const Ring& ring = f.ring();
    const auto x = SkewPoly<Ring>::x(ring);
    if (!(skew_mul(f, x, t) == skew_mul(x, f, t))) return false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const auto a = SkewPoly<Ring>::constant(ring, ring.element(i));
        if (!(skew_mul(f, a, t) == skew_mul(a, f, t))) return false;
    }
    return true;
}

/// Theta^j applied to every coefficient; x^j f = apply_theta_power(f, j) x^j.
template <chain_ring Ring>
SkewPoly<Ring> apply_theta_power(const SkewPoly<Ring>& f, int j, const typename Ring::automorphism_type& t) {
    std::vector<typename Ring::element_type> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.ring().apply(t, f.coeffs()[i], j);
    return {f.ring(), std::move(c)};
}

template <chain_ring Ring>
SkewPoly<Ring> coeffwise_theta(const SkewPoly<Ring>& f, const typename Ring::automorphism_type& t) {
    return apply_theta_power(f, 1, t);
}

/// sum_{j=0}^{d} Theta^j(w_{d-j}) x^j.
template <chain_ring Ring>
SkewPoly<Ring> reversal(const SkewPoly<Ring>& w, int d, const typename Ring::automorphism_type& t) {
    if (w.degree() > d) throw std::invalid_argument("reversal length is smaller than the degree");
    if (d < 0) return SkewPoly<Ring>(w.ring());
    std::vector<typename Ring::element_type> c(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) c[j] = w.ring().apply(t, w.coeff(d - j), j);
    return {w.ring(), std::move(c)};
}

/// Left-multiplies by the inverse of the leading coefficient.
template <chain_ring Ring>
SkewPoly<Ring> make_monic(const SkewPoly<Ring>& f) {
    detail::require_unit_leading(f);
    return f.ring().inverse(f.leading()) * f;
}

// Operations specific to F_{p^m} + u F_{p^m}.

using Poly = SkewPoly<FpmURing>;

inline Poly residue_part(const Poly& f) {
    std::vector<RingElement> c;
    for (const auto& a : f.coeffs()) c.emplace_back(a.constant());
    return {f.ring(), std::move(c)};
}

inline Poly u_part(const Poly& f) {
    std::vector<RingElement> c;
    for (const auto& a : f.coeffs()) c.emplace_back(a.u_part());
    return {f.ring(), std::move(c)};
}

inline bool is_residue(const Poly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const RingElement& a) { return a.u_part().is_zero(); });
}

/// f0 + u f1 for residue polynomials f0, f1.
inline Poly from_parts(const Poly& f0, const Poly& f1) { return f0 + f0.ring().u() * f1; }

/// g with f u = u g, coefficients in F_{p^m}: g_i = bar(f_i) nu_i.
inline Poly shift_through_u(const Poly& f, const Automorphism& t) {
    std::vector<RingElement> c;
    for (int i = 0; i <= f.degree(); ++i) c.emplace_back(f.coeff(i).constant() * t.nu(i));
    return {f.ring(), std::move(c)};
}

/// g with u f = g u, coefficients in F_{p^m}: g_i = bar(f_i) nu_i^{-1}.
inline Poly shift_u_through(const Poly& f, const Automorphism& t) {
    std::vector<RingElement> c;
    for (int i = 0; i <= f.degree(); ++i) c.emplace_back(f.coeff(i).constant() * t.nu(i).inverse());
    return {f.ring(), std::move(c)};
}

}  // namespace skewcodes

#endif  // SKEWCODES_SKEWPOLY_HPP
