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
 * @file duality.hpp
 * @brief Euclidean and Hermitian duals of skew constacyclic codes.
 *
 * Closed forms, with h = (x^n - lambda) / g and x^d phi(w) realized as reversal(w, d):
 *
 *   <g>^perp        = <x^{deg h} phi(h)>                          (lambda^2 = 1)
 *   <u g1>^perp     = <u, x^{n - deg g1} phi(h1)>                 (lambda = +-1)
 *   <u g1, f>^perp  = <x^{n - deg f0} phi(h0 u), x^{n - deg g1} phi(h1 - u m)>,
 *                     m g1 = shift_through_u(h0) f1
 *
 * and the Hermitian versions apply Theta to every coefficient of each generator.
 * brute_dual computes the orthogonal complement by exhaustive search and is the oracle
 * these are tested against.
 */

#ifndef SKEWCODES_DUALITY_HPP
#define SKEWCODES_DUALITY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify.hpp"

namespace skewcodes {

enum class InnerProduct { euclidean, hermitian };

inline std::string to_string(InnerProduct k) { return k == InnerProduct::euclidean ? "euclidean" : "hermitian"; }

namespace detail {

template <chain_ring Ring>
void require_hermitian_order(InnerProduct kind, const CodeContext<Ring>& ctx) {
    if (kind == InnerProduct::hermitian && ctx.theta_order() != 2)
        throw std::invalid_argument("the Hermitian inner product requires ord(Theta) = 2, got " +
                                    std::to_string(ctx.theta_order()));
}

template <chain_ring Ring>
void require_lambda_squared_one(const CodeContext<Ring>& ctx) {
    if (!(ctx.lambda() * ctx.lambda() == ctx.ring().one()))
        throw std::invalid_argument("dual generators require lambda^2 = 1");
}

inline void require_lambda_pm_one(const Context& ctx) {
    const auto one = ctx.ring().one();
    if (!(ctx.lambda() == one || ctx.lambda() == -one))
        throw std::invalid_argument("ideal duals require lambda = 1 or lambda = -1");
}

}  // namespace detail

/// sum u_i v_i, or sum u_i Theta(v_i) for the Hermitian product.
template <chain_ring Ring>
typename Ring::element_type inner(const std::vector<typename Ring::element_type>& a,
                                  const std::vector<typename Ring::element_type>& b, InnerProduct kind,
                                  const CodeContext<Ring>& ctx) {
    detail::require_hermitian_order(kind, ctx);
    if (a.size() != b.size()) throw std::invalid_argument("inner product of words with different lengths");
    auto s = ctx.ring().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * (kind == InnerProduct::hermitian ? ctx.ring().apply(ctx.theta(), b[i], 1) : b[i]);
    return s;
}

/// Codes whose R-span is the whole span, picked greedily in code order.
template <chain_ring Ring>
std::vector<std::uint64_t> generating_codes(const CodeSpan<Ring>& span) {
    const auto& ws = span.space();
    std::vector<bool> member(ws.total(), false);
    std::vector<std::uint64_t> list{0}, gens;
    member[0] = true;
    for (const auto v : span.codes()) {
        if (member[v]) continue;
        gens.push_back(v);
        std::vector<std::uint64_t> multiples;
        for (std::uint32_t a = 1; a < ws.alphabet(); ++a) multiples.push_back(ws.scale_code(a, v));
        const std::size_t old = list.size();
        for (std::size_t i = 0; i < old; ++i)
            for (const auto av : multiples) {
                const auto c = ws.add_codes(list[i], av);
                if (!member[c]) {
                    member[c] = true;
                    list.push_back(c);
                }
            }
    }
    return gens;
}

/// Exhaustive orthogonal complement of a submodule of R^n.
template <chain_ring Ring>
CodeSpan<Ring> brute_dual(const CodeSpan<Ring>& span, InnerProduct kind, const CodeContext<Ring>& ctx) {
    detail::require_hermitian_order(kind, ctx);
    const auto& ws = span.space();
    const int n = ws.length();
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto c : generating_codes(span)) {
        auto w = ws.decode(c);
        std::vector<std::uint32_t> d(n);
        for (int i = 0; i < n; ++i) {
            const auto e = kind == InnerProduct::hermitian ? ctx.ring().apply(ctx.theta(), w[i], 1) : w[i];
            d[i] = static_cast<std::uint32_t>(ctx.ring().index(e));
        }
        gens.push_back(std::move(d));
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 0; c < ws.total(); ++c) {
        const auto v = ws.digits(c);
        bool orth = true;
        for (const auto& g : gens) {
            std::uint32_t s = 0;
            for (int i = 0; i < n; ++i) s = ws.add(s, ws.mul(v[i], g[i]));
            if (s != 0) {
                orth = false;
                break;
            }
        }
        if (orth) out.push_back(c);
    }
    return {span.space_ptr(), std::move(out)};
}

/// Monic x^{deg h} phi(h), h = (x^n - lambda) / g.
template <chain_ring Ring>
SkewPoly<Ring> euclidean_dual_li1(const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    detail::require_lambda_squared_one(ctx);
    detail::require_monic_divisor(g, ctx);
    const auto h = right_quotient(ctx.modulus(), g, ctx.theta());
    return make_monic(reversal(h, h.degree(), ctx.theta()));
}

/// Monic Theta-image of x^{deg h} phi(h).
template <chain_ring Ring>
SkewPoly<Ring> hermitian_dual_li1(const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    detail::require_hermitian_order(InnerProduct::hermitian, ctx);
    detail::require_lambda_squared_one(ctx);
    detail::require_monic_divisor(g, ctx);
    const auto h = right_quotient(ctx.modulus(), g, ctx.theta());
    return make_monic(coeffwise_theta(reversal(h, h.degree(), ctx.theta()), ctx.theta()));
}

/// Tests g * h' = x^n - lambda for the candidate h' built from g_0^{-1} and the g_{k-i}.
template <chain_ring Ring>
bool is_self_dual_li1(const SkewPoly<Ring>& g, InnerProduct kind, const CodeContext<Ring>& ctx) {
    detail::require_hermitian_order(kind, ctx);
    detail::require_lambda_squared_one(ctx);
    if (ctx.n() % 2 != 0) throw std::invalid_argument("self-duality requires even n");
    detail::require_monic_divisor(g, ctx);
    const int k = ctx.n() / 2;
    if (g.degree() != k) throw std::invalid_argument("self-dual generator must have degree n/2");
    const auto& ring = ctx.ring();
    const auto& t = ctx.theta();
    if (!ring.is_unit(g.coeff(0))) return false;
    const int shift = kind == InnerProduct::hermitian ? -k - 1 : -k;
    const auto g0inv = ring.inverse(g.coeff(0));
    std::vector<typename Ring::element_type> c(k + 1, ring.zero());
    c[0] = ring.apply(t, g0inv, shift);
    for (int i = 1; i < k; ++i) c[i] = ring.apply(t, g0inv * g.coeff(k - i), shift + i);
    c[k] = ring.one();
    return skew_mul(g, SkewPoly<Ring>(ring, std::move(c)), t) == ctx.modulus();
}

/// m with m g1 = shift_through_u((x^n - lambda) / f0) f1.
inline Poly compute_m(const Poly& f0, const Poly& f1, const Poly& g1, const Context& ctx) {
    if (!ctx.lambda().u_part().is_zero()) throw std::invalid_argument("compute_m requires lambda in F_{p^m}");
    const auto& t = ctx.theta();
    const Poly h0 = right_quotient(ctx.modulus(), f0, t);
    const auto [m, r] = right_divmod(skew_mul(shift_through_u(h0, t), f1, t), g1, t);
    if (!r.is_zero()) throw std::domain_error("g1 does not right-divide the LI-3 compatibility target");
    return m;
}

namespace detail {

// Generators of the dual before re-canonicalization.
inline std::vector<Poly> dual_generators(const CanonicalIdeal& I, InnerProduct kind, const Context& ctx) {
    require_lambda_pm_one(ctx);
    require_hermitian_order(kind, ctx);
    const auto& t = ctx.theta();
    const int n = ctx.n();
    const RingElement u = ctx.ring().u();
    std::vector<Poly> gens;
    switch (I.type) {
        case IdealType::li1: {
            const Poly h = right_quotient(ctx.modulus(), I.g, t);
            gens = {reversal(h, h.degree(), t)};
            break;
        }
        case IdealType::li2: {
            const Poly h1 = right_quotient(ctx.modulus(), I.g1, t);
            gens = {Poly::constant(ctx.ring(), u), reversal(h1, n - I.g1.degree(), t)};
            break;
        }
        case IdealType::li3: {
            const Poly h0 = right_quotient(ctx.modulus(), I.f0, t);
            const Poly h1 = right_quotient(ctx.modulus(), I.g1, t);
            const Poly m = compute_m(I.f0, I.f1, I.g1, ctx);
            const Poly h0u = skew_mul(h0, Poly::constant(ctx.ring(), u), t);
            gens = {reversal(h0u, n - I.f0.degree(), t), reversal(h1 - u * m, n - I.g1.degree(), t)};
            break;
        }
    }
    if (kind == InnerProduct::hermitian)
        for (auto& g : gens) g = coeffwise_theta(g, t);
    return gens;
}

}  // namespace detail

inline CanonicalIdeal dual_ideal(const CanonicalIdeal& I, InnerProduct kind, const Context& ctx) {
    auto gens = detail::dual_generators(I, kind, ctx);
    if (I.type == IdealType::li1) return CanonicalIdeal::li1(make_monic(gens.front()));
    return canonicalize(span_from_generators(gens, ctx), ctx);
}

inline CanonicalIdeal euclidean_dual_ideal(const CanonicalIdeal& I, const Context& ctx) {
    return dual_ideal(I, InnerProduct::euclidean, ctx);
}

inline CanonicalIdeal hermitian_dual_ideal(const CanonicalIdeal& I, const Context& ctx) {
    return dual_ideal(I, InnerProduct::hermitian, ctx);
}

}  // namespace skewcodes

#endif  // SKEWCODES_DUALITY_HPP
