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
 * @file classify.hpp
 * @brief Canonical generators and exhaustive enumeration of left ideals of
 *        (F_{p^m} + u F_{p^m})[x; Theta] / <x^n - lambda>.
 *
 * Every left ideal C has exactly one canonical form:
 *   LI-1  <g>               g monic of minimal degree in C (the zero ideal is <x^n - lambda>);
 *   LI-2  <u g1>            C has no monic member; u g1 is its minimal member with leading u;
 *   LI-3  <u g1, f0 + u f1> minimal-degree members are not monic but C has a monic member;
 *                           f0 + u f1 is the monic member of least degree with deg f1 < deg g1.
 * g1, f0 and f1 have coefficients in F_{p^m}.
 *
 * canonicalize reads this form off a materialized span, so it serves both as the
 * deduplication key for enumeration and as the normal form for computed duals.
 */

#ifndef SKEWCODES_CLASSIFY_HPP
#define SKEWCODES_CLASSIFY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quotcode.hpp"
#include "text.hpp"

namespace skewcodes {

enum class IdealType { li1 = 1, li2 = 2, li3 = 3 };

inline std::string to_string(IdealType t) { return "LI-" + std::to_string(static_cast<int>(t)); }

struct CanonicalIdeal {
    IdealType type;
    Poly g;   // LI-1 generator
    Poly g1;  // LI-2, LI-3
    Poly f0;  // LI-3
    Poly f1;  // LI-3

    static CanonicalIdeal li1(const Poly& g) {
        const Poly z(g.ring());
        return {IdealType::li1, g, z, z, z};
    }
    static CanonicalIdeal li2(const Poly& g1) {
        const Poly z(g1.ring());
        return {IdealType::li2, z, g1, z, z};
    }
    static CanonicalIdeal li3(const Poly& g1, const Poly& f0, const Poly& f1) {
        return {IdealType::li3, Poly(g1.ring()), g1, f0, f1};
    }

    /// <g>, <u g1> or <u g1, f0 + u f1>.
    std::vector<Poly> generators() const {
        const RingElement u = g.ring().u();
        switch (type) {
            case IdealType::li1: return {g};
            case IdealType::li2: return {u * g1};
            case IdealType::li3: return {u * g1, from_parts(f0, f1)};
        }
        return {};
    }

    friend bool operator==(const CanonicalIdeal&, const CanonicalIdeal&) = default;
};

inline CodeSpan<FpmURing> ideal_span(const CanonicalIdeal& ideal, const Context& ctx) {
    return span_from_generators(ideal.generators(), ctx);
}

/// |R|^{n - deg g}, (p^m)^{n - deg g1}, (p^m)^{2n - deg f0 - deg g1}; the zero ideal has 1 word.
inline std::uint64_t expected_cardinality(const CanonicalIdeal& I, const Context& ctx) {
    const std::uint64_t q = static_cast<std::uint64_t>(ctx.ring().field().size());
    auto pw = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    switch (I.type) {
        case IdealType::li1: return pw(q * q, ctx.n() - I.g.degree());
        case IdealType::li2: return pw(q, ctx.n() - I.g1.degree());
        case IdealType::li3: return pw(q, 2 * ctx.n() - I.f0.degree() - I.g1.degree());
    }
    return 0;
}

/// Display label: "<0>", "<x+1+2u>", "<u>", "<u(x+1)>", "<u, x+1>".
inline std::string label(const CanonicalIdeal& I, const Context& ctx) {
    auto u_times = [](const Poly& g1) {
        if (g1.degree() == 0) return std::string("u");
        const auto nonzero = std::count_if(g1.coeffs().begin(), g1.coeffs().end(),
                                           [](const RingElement& a) { return !a.is_zero(); });
        const std::string s = to_string(g1, true);
        return nonzero == 1 ? "u" + s : "u(" + s + ")";
    };
    switch (I.type) {
        case IdealType::li1:
            return I.g == ctx.modulus() ? "<0>" : "<" + to_string(I.g, true) + ">";
        case IdealType::li2: return "<" + u_times(I.g1) + ">";
        case IdealType::li3: return "<" + u_times(I.g1) + ", " + to_string(from_parts(I.f0, I.f1), true) + ">";
    }
    return {};
}

/// (type, degrees, coefficients) ordering used for all listings.
inline bool canonical_less(const CanonicalIdeal& a, const CanonicalIdeal& b) {
    auto key = [](const CanonicalIdeal& I) {
        switch (I.type) {
            case IdealType::li1: return std::tuple(1, I.g.degree(), 0, I.g, I.g);
            case IdealType::li2: return std::tuple(2, I.g1.degree(), 0, I.g1, I.g1);
            case IdealType::li3: return std::tuple(3, I.f0.degree(), I.g1.degree(), I.f0, I.g1);
        }
        return std::tuple(0, 0, 0, I.g, I.g);
    };
    const auto ka = key(a);
    const auto kb = key(b);
    if (auto c = std::get<0>(ka) <=> std::get<0>(kb); c != 0) return c < 0;
    if (auto c = std::get<1>(ka) <=> std::get<1>(kb); c != 0) return c < 0;
    if (auto c = std::get<2>(ka) <=> std::get<2>(kb); c != 0) return c < 0;
    if (auto c = compare(std::get<3>(ka), std::get<3>(kb)); c != 0) return c < 0;
    if (auto c = compare(std::get<4>(ka), std::get<4>(kb)); c != 0) return c < 0;
    return compare(a.f1, b.f1) < 0;
}

namespace detail {

// All polynomials of degree < d with coefficients in F_{p^m} (residue) or R.
inline std::vector<Poly> all_polys_below(const FpmURing& ring, int d, bool residue_only) {
    const std::size_t q = residue_only ? static_cast<std::size_t>(ring.field().size()) : ring.size();
    std::vector<Poly> out;
    std::vector<std::size_t> digit(std::max(d, 0), 0);
    for (;;) {
        std::vector<RingElement> c(digit.size());
        for (std::size_t i = 0; i < digit.size(); ++i)
            c[i] = residue_only ? ring.embed(ring.field().element(static_cast<int>(digit[i]))) : ring.element(digit[i]);
        out.emplace_back(ring, std::move(c));
        std::size_t k = 0;
        while (k < digit.size() && ++digit[k] == q) digit[k++] = 0;
        if (k == digit.size()) break;
    }
    return out;
}

inline void check_search_bound(std::uint64_t count, const Context& ctx) {
    if (count > ctx.max_vectors())
        throw BoundError("divisor search space of " + std::to_string(count) + " candidates exceeds the bound of " +
                         std::to_string(ctx.max_vectors()));
}

}  // namespace detail

/// Monic right divisors of target with degree <= max_deg, sorted by (degree, coefficients).
inline std::vector<Poly> monic_right_divisors(const Poly& target, int max_deg, bool residue_only, const Context& ctx) {
    if (target.is_zero() || !target.ring().is_unit(target.leading()))
        throw std::domain_error("target leading coefficient is not a unit");
    const FpmURing& ring = target.ring();
    const std::uint64_t q = residue_only ? ring.field().size() : ring.size();
    const int top = std::min(max_deg, target.degree() - 1);
    std::uint64_t count = 0, layer = 1;
    for (int d = 0; d <= top; ++d, layer *= q) {
        count += layer;
        detail::check_search_bound(count, ctx);
    }
    std::vector<Poly> out;
    for (int d = 0; d <= top; ++d)
        for (const Poly& low : detail::all_polys_below(ring, d, residue_only)) {
            const Poly cand = low + Poly::x(ring, d);
            if (is_right_divisor(cand, target, ctx.theta())) out.push_back(cand);
        }
    // A monic divisor of full degree is the monic associate of the target.
    if (max_deg >= target.degree()) {
        const Poly full = make_monic(target);
        if (!residue_only || is_residue(full)) out.push_back(full);
    }
    std::sort(out.begin(), out.end(), SkewPolyLess<FpmURing>{});
    return out;
}

/// The canonical form of a left ideal given by its full codeword set.
inline CanonicalIdeal canonicalize(const CodeSpan<FpmURing>& span, const Context& ctx) {
    if (!is_left_ideal(span, ctx)) throw std::invalid_argument("span is not a left ideal of the quotient ring");
    const FpmURing& ring = ctx.ring();
    if (span.size() == 1) return CanonicalIdeal::li1(ctx.modulus());

    std::vector<Poly> members;
    members.reserve(span.size());
    int min_deg = ctx.n();
    for (const auto& w : span.words()) {
        Poly f = ctx.to_poly(w);
        if (f.is_zero()) continue;
        min_deg = std::min(min_deg, f.degree());
        members.push_back(std::move(f));
    }

    auto unique_of = [](const std::vector<const Poly*>& found, const char* what) -> const Poly& {
        if (found.size() != 1)
            throw std::logic_error(std::string("expected a unique ") + what + ", found " + std::to_string(found.size()));
        return *found.front();
    };

    std::vector<const Poly*> monic_min, monic_any, u_led_min;
    for (const auto& f : members) {
        if (f.is_monic()) {
            monic_any.push_back(&f);
            if (f.degree() == min_deg) monic_min.push_back(&f);
        }
        if (f.degree() == min_deg && f.leading() == ring.u()) u_led_min.push_back(&f);
    }
    if (!monic_min.empty()) return CanonicalIdeal::li1(unique_of(monic_min, "monic member of minimal degree"));

    const Poly& ug1 = unique_of(u_led_min, "minimal member with leading coefficient u");
    const Poly g1 = u_part(ug1);
    if (monic_any.empty()) return CanonicalIdeal::li2(g1);

    int monic_deg = ctx.n();
    for (const Poly* f : monic_any) monic_deg = std::min(monic_deg, f->degree());
    std::vector<const Poly*> reduced;
    for (const Poly* f : monic_any)
        if (f->degree() == monic_deg && u_part(*f).degree() < g1.degree()) reduced.push_back(f);
    const Poly& f = unique_of(reduced, "reduced monic member of minimal degree");
    return CanonicalIdeal::li3(g1, residue_part(f), u_part(f));
}

struct IdealRecord {
    CanonicalIdeal ideal;
    CodeSpan<FpmURing> span;
};

/// Every left ideal exactly once, with its span, in canonical order.
inline std::vector<IdealRecord> enumerate_ideals_with_spans(const Context& ctx) {
    const auto space = ctx.space();
    const FpmURing& ring = ctx.ring();
    const Automorphism& t = ctx.theta();
    const int n = ctx.n();
    const Poly& M = ctx.modulus();
    const Poly Mbar = residue_part(M);
    const RingElement u = ring.u();
    const auto divisors = monic_right_divisors(Mbar, n, true, ctx);

    std::map<std::vector<std::uint64_t>, CodeSpan<FpmURing>> spans;
    auto add = [&](const std::vector<Poly>& gens) {
        auto s = span_from_generators(gens, ctx);
        auto key = s.codes();
        spans.emplace(std::move(key), std::move(s));
    };

    // LI-1: g0 + u g1 with deg g1 < deg g0, kept when it right-divides x^n - lambda.
    for (const Poly& g0 : divisors)
        for (const Poly& g1 : detail::all_polys_below(ring, g0.degree(), true)) {
            const Poly g = from_parts(g0, g1);
            if (is_right_divisor(g, M, t)) add({g});
        }

    // LI-2: u g1.
    for (const Poly& g1 : divisors)
        if (g1.degree() < n) add({u * g1});

    // LI-3: (u g1, f0 + u f1), g1 | f0 | x^n - lambda-bar, deg f1 < deg g1 < deg f0 < n.
    const bool lambda_in_field = ctx.lambda().u_part().is_zero();
    for (const Poly& f0 : divisors) {
        if (f0.degree() >= n) continue;
        const Poly h0 = lambda_in_field ? right_quotient(M, f0, t) : Poly(ring);
        for (const Poly& g1 : divisors) {
            if (g1.degree() >= f0.degree() || !is_right_divisor(g1, f0, t)) continue;
            for (const Poly& f1 : detail::all_polys_below(ring, g1.degree(), true)) {
                if (lambda_in_field && !is_right_divisor(g1, skew_mul(shift_through_u(h0, t), f1, t), t)) continue;
                add({u * g1, from_parts(f0, f1)});
            }
        }
    }

    std::vector<IdealRecord> out;
    out.reserve(spans.size());
    for (auto& [key, s] : spans) out.push_back({canonicalize(s, ctx), std::move(s)});
    std::sort(out.begin(), out.end(),
              [](const IdealRecord& a, const IdealRecord& b) { return canonical_less(a.ideal, b.ideal); });
    return out;
}

inline std::vector<CanonicalIdeal> enumerate_ideals(const Context& ctx) {
    std::vector<CanonicalIdeal> out;
    for (auto& r : enumerate_ideals_with_spans(ctx)) out.push_back(std::move(r.ideal));
    return out;
}

/// Cover relation (i, j): span j is a maximal proper sub-ideal of span i.
inline std::vector<std::pair<std::size_t, std::size_t>> cover_edges(const std::vector<CodeSpan<FpmURing>>& spans) {
    const std::size_t N = spans.size();
    std::vector<std::vector<char>> below(N, std::vector<char>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            below[i][j] = i != j && spans[j].size() < spans[i].size() && spans[j].subset_of(spans[i]);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < N && cover; ++k)
                if (below[i][k] && below[k][j]) cover = false;
            if (cover) edges.emplace_back(i, j);
        }
    return edges;
}

/// Hasse diagram edges between the given ideals, larger to smaller, as index pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> ideal_lattice(const std::vector<CanonicalIdeal>& ideals,
                                                                      const Context& ctx) {
    std::vector<CodeSpan<FpmURing>> spans;
    spans.reserve(ideals.size());
    for (const auto& I : ideals) spans.push_back(ideal_span(I, ctx));
    return cover_edges(spans);
}

}  // namespace skewcodes

#endif  // SKEWCODES_CLASSIFY_HPP
