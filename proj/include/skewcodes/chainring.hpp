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
 * @file chainring.hpp
 * @brief The finite chain ring F_{p^m} + u F_{p^m} (u^2 = 0) and its automorphisms.
 *
 * The generic algorithms (skew polynomials, quotient codes, LI-1 duality) are written
 * against the chain_ring concept below. FpmURing is the one shipped model.
 *
 * Every automorphism of F_{p^m} + u F_{p^m} has the form
 *     Theta_{s,beta}(a + b u) = theta(a) + beta theta(b) u,   theta = Frobenius^s, beta != 0.
 */

#ifndef SKEWCODES_CHAINRING_HPP
#define SKEWCODES_CHAINRING_HPP

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"

namespace skewcodes {

/// Minimal operation contract a finite chain ring must provide.
template <class R>
concept chain_ring =
    std::copy_constructible<R> && std::equality_comparable<R> && std::regular<typename R::element_type> &&
    std::copy_constructible<typename R::automorphism_type> &&
    requires(const R& ring, const typename R::element_type& a, const typename R::automorphism_type& t,
             std::size_t i, int k) {
        { ring.zero() } -> std::same_as<typename R::element_type>;
        { ring.one() } -> std::same_as<typename R::element_type>;
        { ring.size() } -> std::convertible_to<std::size_t>;
        { ring.element(i) } -> std::same_as<typename R::element_type>;
        { ring.index(a) } -> std::convertible_to<std::size_t>;
        { ring.is_unit(a) } -> std::convertible_to<bool>;
        { ring.inverse(a) } -> std::same_as<typename R::element_type>;
        { ring.residue(a) };
        { ring.apply(t, a, k) } -> std::same_as<typename R::element_type>;
        { ring.order(t) } -> std::convertible_to<int>;
        { a + a } -> std::same_as<typename R::element_type>;
        { a - a } -> std::same_as<typename R::element_type>;
        { a * a } -> std::same_as<typename R::element_type>;
        { -a } -> std::same_as<typename R::element_type>;
    };

/// a + b u with u^2 = 0.
class RingElement {
   public:
    RingElement() = default;
    explicit RingElement(FieldElement a) : a_(a), b_(a.field().zero()) {}
    RingElement(FieldElement a, FieldElement b) : a_(a), b_(b) {
        if (&a.field() != &b.field()) throw std::invalid_argument("ring element parts belong to different fields");
    }

    const FieldElement& constant() const noexcept { return a_; }
    const FieldElement& u_part() const noexcept { return b_; }
    const Field& field() const { return a_.field(); }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const noexcept { return a_.is_one() && b_.is_zero(); }
    bool is_unit() const noexcept { return !a_.is_zero(); }

    /// (a + b u)^{-1} = a^{-1} - a^{-2} b u.
    RingElement inverse() const {
        if (!is_unit()) throw std::domain_error("ring element " + to_string() + " is not a unit");
        const FieldElement ai = a_.inverse();
        return {ai, -(ai * ai * b_)};
    }

    friend RingElement operator+(const RingElement& x, const RingElement& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend RingElement operator-(const RingElement& x, const RingElement& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        return {x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    RingElement operator-() const { return {-a_, -b_}; }
    RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
    RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
    RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

    friend bool operator==(const RingElement&, const RingElement&) = default;
    friend std::strong_ordering operator<=>(const RingElement& x, const RingElement& y) noexcept {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

    /// "a+b*u" with zero parts dropped: "2", "u", "2*u", "1+2*u".
    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        const std::string upart = b_.is_one() ? "u" : b_.to_string() + "*u";
        if (a_.is_zero()) return upart;
        return a_.to_string() + "+" + upart;
    }

   private:
    FieldElement a_;
    FieldElement b_;
};

/// Reduction modulo u.
inline FieldElement bar(const RingElement& x) { return x.constant(); }

/// Theta_{s,beta}. Caches its order and the multipliers nu_k with Theta^k(u) = nu_k u.
class Automorphism {
   public:
    Automorphism(int s, FieldElement beta) : beta_(beta) {
        const Field& f = beta.field();
        if (beta.is_zero()) throw std::invalid_argument("automorphism parameter beta must be nonzero");
        const int m = f.degree();
        s_ = ((s % m) + m) % m;

        // Order: least k with Theta^k fixing the generators t and u.
        const FieldElement t = f.generator();
        FieldElement tk = t;
        FieldElement nu = f.one();
        nu_.push_back(nu);
        for (int k = 1;; ++k) {
            tk = tk.frobenius(s_);
            nu = beta_ * nu.frobenius(s_);
            if (tk == t && nu.is_one()) {
                order_ = k;
                break;
            }
            nu_.push_back(nu);
        }
    }

    int frobenius_exponent() const noexcept { return s_; }
    const FieldElement& beta() const noexcept { return beta_; }
    int order() const noexcept { return order_; }
    bool is_identity() const noexcept { return order_ == 1; }

    /// nu_k with Theta^k(u) = nu_k u, for any integer k.
    const FieldElement& nu(int k) const { return nu_[reduce(k)]; }

    /// Theta^k(x) for any integer k.
    RingElement apply(const RingElement& x, int k = 1) const {
        const int r = reduce(k);
        const int e = r * s_;
        return {x.constant().frobenius(e), nu_[r] * x.u_part().frobenius(e)};
    }
    RingElement operator()(const RingElement& x) const { return apply(x, 1); }

    friend bool operator==(const Automorphism& a, const Automorphism& b) noexcept {
        return a.s_ == b.s_ && a.beta_ == b.beta_;
    }

    std::string to_string() const {
        return "Theta[s=" + std::to_string(s_) + ",beta=" + beta_.to_string() + "]";
    }

   private:
    int reduce(int k) const noexcept { return ((k % order_) + order_) % order_; }

    int s_ = 0;
    FieldElement beta_;
    int order_ = 1;
    std::vector<FieldElement> nu_;
};

/// F_{p^m} + u F_{p^m}. Element indices follow the (a, b) lexicographic order.
class FpmURing {
   public:
    using element_type = RingElement;
    using automorphism_type = Automorphism;
    using residue_type = FieldElement;

    explicit FpmURing(const Field& field) : field_(&field) {}
    explicit FpmURing(const FieldParams& params) : FpmURing(Field::get(params)) {}

    const Field& field() const noexcept { return *field_; }

    RingElement zero() const { return RingElement(field_->zero()); }
    RingElement one() const { return RingElement(field_->one()); }
    RingElement u() const { return {field_->zero(), field_->one()}; }
    RingElement embed(const FieldElement& a) const { return RingElement(a); }
    RingElement make(const FieldElement& a, const FieldElement& b) const { return {a, b}; }
    RingElement from_int(long long k) const { return RingElement(field_->from_int(k)); }

    std::size_t size() const noexcept { return static_cast<std::size_t>(field_->size()) * field_->size(); }
    RingElement element(std::size_t i) const {
        const int q = field_->size();
        return {field_->element(static_cast<int>(i / q)), field_->element(static_cast<int>(i % q))};
    }
    std::size_t index(const RingElement& x) const {
        return static_cast<std::size_t>(x.constant().index()) * field_->size() + x.u_part().index();
    }
    std::vector<RingElement> elements() const {
        std::vector<RingElement> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(element(i));
        return out;
    }

    bool is_unit(const RingElement& x) const { return x.is_unit(); }
    RingElement inverse(const RingElement& x) const { return x.inverse(); }
    FieldElement residue(const RingElement& x) const { return x.constant(); }

    RingElement apply(const Automorphism& t, const RingElement& x, int k = 1) const { return t.apply(x, k); }
    int order(const Automorphism& t) const { return t.order(); }
    bool is_fixed(const Automorphism& t, const RingElement& x) const { return t.apply(x) == x; }

    Automorphism identity() const { return {0, field_->one()}; }
    Automorphism automorphism(int s, const FieldElement& beta) const { return {s, beta}; }

    friend bool operator==(const FpmURing& a, const FpmURing& b) noexcept { return a.field_ == b.field_; }

   private:
    const Field* field_;
};

static_assert(chain_ring<FpmURing>);

inline RingElement apply_auto(const Automorphism& t, const RingElement& x) { return t.apply(x); }

inline int auto_order(const Automorphism& t) { return t.order(); }

inline bool fixed_subring_membership(const Automorphism& t, const RingElement& x) { return t.apply(x) == x; }

/// All m (p^m - 1) automorphisms, ordered by (s, beta).
inline std::vector<Automorphism> enumerate_automorphisms(const FieldParams& params) {
    const Field& f = Field::get(params);
    std::vector<Automorphism> out;
    for (int s = 0; s < f.degree(); ++s)
        for (const auto& beta : f.elements())
            if (!beta.is_zero()) out.emplace_back(s, beta);
    return out;
}

}  // namespace skewcodes

#endif  // SKEWCODES_CHAINRING_HPP
