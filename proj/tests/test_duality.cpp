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

#include <gtest/gtest.h>

#include <map>

#include "support.hpp"

using namespace skewcodes;
using testing_support::f3_context;
using testing_support::P;
using testing_support::Rng;

namespace {

using Word = Context::Word;

CanonicalIdeal ideal_of(const std::vector<std::string>& gens, const Context& ctx) {
    std::vector<Poly> g;
    for (const auto& s : gens) g.push_back(P(s, ctx));
    return canonicalize(span_from_generators(g, ctx), ctx);
}

std::string typed_label(const CanonicalIdeal& I, const Context& ctx) {
    return label(I, ctx) + "_" + std::to_string(static_cast<int>(I.type));
}

// Oracle: words orthogonal to every member of the span (not just a generating set).
std::vector<std::uint64_t> naive_dual(const CodeSpan<FpmURing>& span, InnerProduct kind, const Context& ctx) {
    const auto space = ctx.space();
    const auto members = span.words();
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 0; c < space->total(); ++c) {
        const Word v = space->decode(c);
        bool orth = true;
        for (const auto& w : members) {
            RingElement s = ctx.ring().zero();
            for (int i = 0; i < ctx.n(); ++i)
                s += v[i] * (kind == InnerProduct::hermitian ? ctx.theta()(w[i]) : w[i]);
            if (!s.is_zero()) {
                orth = false;
                break;
            }
        }
        if (orth) out.push_back(c);
    }
    return out;
}

std::vector<InnerProduct> kinds_for(const Context& c) {
    if (c.theta_order() == 2) return {InnerProduct::euclidean, InnerProduct::hermitian};
    return {InnerProduct::euclidean};
}

RingElement euclid(const Word& a, const Word& b, const FpmURing& R) {
    RingElement s = R.zero();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST(Duality, InnerProductExamples) {
    const auto ctx = f3_context(2, 2);
    auto w = [&](const char* a, const char* b) {
        return Word{parse_ring_element(a, ctx.ring()), parse_ring_element(b, ctx.ring())};
    };
    EXPECT_TRUE(inner(w("1", "1"), w("1", "2"), InnerProduct::euclidean, ctx).is_zero());
    EXPECT_TRUE(inner(w("u", "0"), w("u", "1"), InnerProduct::euclidean, ctx).is_zero());
    EXPECT_TRUE(inner(w("u", "0"), w("u", "0"), InnerProduct::hermitian, ctx).is_zero());
    EXPECT_EQ(inner(w("1", "0"), w("u", "0"), InnerProduct::hermitian, ctx), parse_ring_element("2*u", ctx.ring()));
    EXPECT_EQ(inner(w("1", "0"), w("u", "0"), InnerProduct::euclidean, ctx), ctx.ring().u());
    const auto id = f3_context(1, 2);
    EXPECT_THROW(inner(w("1", "1"), w("1", "1"), InnerProduct::hermitian, id), std::invalid_argument);
    EXPECT_THROW(inner(w("1", "1"), Word{ctx.ring().one()}, InnerProduct::euclidean, ctx), std::invalid_argument);
    EXPECT_EQ(to_string(InnerProduct::hermitian), "hermitian");
}

TEST(Duality, BruteDualExamplesAndOracle) {
    const auto ctx = f3_context(2, 2);
    const auto zero = span_from_generators({P("0", ctx)}, ctx);
    const auto full = span_from_generators({P("1", ctx)}, ctx);
    EXPECT_EQ(brute_dual(zero, InnerProduct::euclidean, ctx), full);
    EXPECT_EQ(brute_dual(full, InnerProduct::euclidean, ctx), zero);
    EXPECT_EQ(brute_dual(span_from_generators({P("x+1", ctx)}, ctx), InnerProduct::euclidean, ctx),
              span_from_generators({P("x+2", ctx)}, ctx));
    for (const auto& gp : testing_support::grid()) {
        const auto c = gp.context();
        if (c.space()->total() > 256) continue;
        for (const auto& r : enumerate_ideals_with_spans(c))
            for (const auto kind : kinds_for(c))
                ASSERT_EQ(brute_dual(r.span, kind, c).codes(), naive_dual(r.span, kind, c)) << gp.name();
    }
}

TEST(Duality, LinearDualGeneratorExamples) {
    const auto ctx = f3_context(2, 2);
    EXPECT_EQ(euclidean_dual_li1(P("x+1", ctx), ctx), P("x+2", ctx));
    EXPECT_EQ(euclidean_dual_li1(P("x+1+2*u", ctx), ctx), P("x+2+2*u", ctx));
    EXPECT_EQ(euclidean_dual_li1(ctx.modulus(), ctx), P("1", ctx));
    EXPECT_EQ(euclidean_dual_li1(P("1", ctx), ctx), ctx.modulus());
    EXPECT_EQ(hermitian_dual_li1(P("x+1+2*u", ctx), ctx), P("x+2+u", ctx));
    EXPECT_EQ(hermitian_dual_li1(P("x+1", ctx), ctx), P("x+2", ctx));
    EXPECT_EQ(hermitian_dual_li1(P("x+2+u", ctx), ctx), P("x+1+2*u", ctx));
    EXPECT_THROW(euclidean_dual_li1(P("x+u", ctx), ctx), std::invalid_argument);
    EXPECT_THROW(hermitian_dual_li1(P("x+1", f3_context(1, 2)), f3_context(1, 2)), std::invalid_argument);
}

TEST(Duality, LambdaRestrictions) {
    // lambda = 1 + u satisfies lambda^2 = 1 in characteristic 2 but is neither 1 nor -1.
    int proper = 0;
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}})
        for (int n : {2, 3, 4}) {
            const FpmURing R = testing_support::ring_of(p, m);
            const Context c(R, R.identity(), n, R.make(R.field().one(), R.field().one()));
            for (const auto& g : monic_right_divisors(c.modulus(), n, false, c)) {
                const Poly d = euclidean_dual_li1(g, c);
                EXPECT_TRUE(is_right_divisor(d, c.modulus(), c.theta()));
                EXPECT_EQ(span_from_generators({d}, c),
                          brute_dual(span_from_generators({g}, c), InnerProduct::euclidean, c));
                proper += g.degree() > 0 && g.degree() < n;
            }
        }
    EXPECT_GT(proper, 0);
    const FpmURing R = testing_support::ring_of(2, 2);
    const Context c(R, R.identity(), 2, R.make(R.field().one(), R.field().one()));
    EXPECT_THROW(euclidean_dual_ideal(CanonicalIdeal::li1(c.one_poly()), c), std::invalid_argument);
    // lambda^2 != 1: 1 + u over F_3 + u F_3 has square 1 + 2u.
    const FpmURing R3 = testing_support::ring_of(3, 1);
    const Context c3(R3, R3.identity(), 2, R3.make(R3.field().one(), R3.field().one()));
    EXPECT_THROW(euclidean_dual_li1(c3.one_poly(), c3), std::invalid_argument);
    EXPECT_THROW(compute_m(P("x+1", f3_context(2, 2)), P("0", f3_context(2, 2)), P("1", f3_context(2, 2)), c3),
                 std::invalid_argument);
}

TEST(Duality, ComputeM) {
    const auto ctx = f3_context(2, 2);
    EXPECT_TRUE(compute_m(P("x+1", ctx), P("0", ctx), P("1", ctx), ctx).is_zero());
    // g1 = 1: m is the whole target shift_through_u((x^2-1)/f0) f1.
    for (const char* f0 : {"x+1", "x+2"})
        for (const char* f1 : {"0", "1", "2"}) {
            const Poly h0 = right_quotient(ctx.modulus(), P(f0, ctx), ctx.theta());
            EXPECT_EQ(compute_m(P(f0, ctx), P(f1, ctx), P("1", ctx), ctx),
                      skew_mul(shift_through_u(h0, ctx.theta()), P(f1, ctx), ctx.theta()));
        }
    // Search for a triple violating the divisibility condition and check it is rejected.
    bool found = false;
    for (const auto& gp : testing_support::grid()) {
        const auto c = gp.context();
        const Poly Mbar = residue_part(c.modulus());
        const auto divs = monic_right_divisors(Mbar, c.n() - 1, true, c);
        for (const auto& f0 : divs)
            for (const auto& g1 : divs) {
                if (g1.degree() >= f0.degree() || !is_right_divisor(g1, f0, c.theta())) continue;
                for (const auto& f1 : detail::all_polys_below(c.ring(), g1.degree(), true)) {
                    const Poly h0 = right_quotient(c.modulus(), f0, c.theta());
                    const Poly target = skew_mul(shift_through_u(h0, c.theta()), f1, c.theta());
                    if (is_right_divisor(g1, target, c.theta())) {
                        const Poly m = compute_m(f0, f1, g1, c);
                        ASSERT_EQ(skew_mul(m, g1, c.theta()), target);
                    } else {
                        found = true;
                        EXPECT_THROW(compute_m(f0, f1, g1, c), std::domain_error) << gp.name();
                    }
                }
            }
    }
    EXPECT_TRUE(found);
}

TEST(Duality, ReferenceTable) {
    const auto ctx = f3_context(2, 2);
    struct Row {
        std::vector<std::string> code;
        std::string euclidean, hermitian;
    };
    const std::vector<Row> rows{
        {{"0"}, "<1>_1", "<1>_1"},
        {{"u*(x+1)"}, "<u, x+2>_3", "<u, x+2>_3"},
        {{"u*(x+2)"}, "<u, x+1>_3", "<u, x+1>_3"},
        {{"u"}, "<u>_2", "<u>_2"},
        {{"x+1+2*u"}, "<x+2+2u>_1", "<x+2+u>_1"},
        {{"x+1+u"}, "<x+2+u>_1", "<x+2+2u>_1"},
        {{"x+1"}, "<x+2>_1", "<x+2>_1"},
        {{"x+2"}, "<x+1>_1", "<x+1>_1"},
        {{"x+2+u"}, "<x+1+u>_1", "<x+1+2u>_1"},
        {{"x+2+2*u"}, "<x+1+2u>_1", "<x+1+u>_1"},
        {{"u", "x+1"}, "<u(x+2)>_2", "<u(x+2)>_2"},
        {{"u", "x+2"}, "<u(x+1)>_2", "<u(x+1)>_2"},
        {{"1"}, "<0>_1", "<0>_1"},
    };
    std::set<std::string> seen;
    for (const auto& row : rows) {
        const auto I = ideal_of(row.code, ctx);
        seen.insert(typed_label(I, ctx));
        EXPECT_EQ(typed_label(euclidean_dual_ideal(I, ctx), ctx), row.euclidean) << label(I, ctx);
        EXPECT_EQ(typed_label(hermitian_dual_ideal(I, ctx), ctx), row.hermitian) << label(I, ctx);
    }
    std::set<std::string> all;
    for (const auto& I : enumerate_ideals(ctx)) all.insert(typed_label(I, ctx));
    EXPECT_EQ(seen, all);
}

TEST(Duality, TheoremDualsMatchBruteForceOnGrid) {
    for (const auto& gp : testing_support::grid()) {
        const auto c = gp.context();
        const auto total = c.space()->total();
        for (const auto& r : enumerate_ideals_with_spans(c))
            for (const auto kind : kinds_for(c)) {
                const auto where = gp.name() + " " + label(r.ideal, c) + " " + to_string(kind);
                const auto brute = brute_dual(r.span, kind, c);
                const auto D = dual_ideal(r.ideal, kind, c);
                ASSERT_EQ(ideal_span(D, c), brute) << where;
                ASSERT_EQ(r.span.size() * brute.size(), total) << where;
                ASSERT_TRUE(is_left_ideal(brute, c)) << where;
                ASSERT_EQ(dual_ideal(D, kind, c), r.ideal) << where;
                for (const auto& g : detail::dual_generators(r.ideal, kind, c))
                    ASSERT_TRUE(brute.contains(c.to_word(g))) << where;
                if (r.ideal.type == IdealType::li1) {
                    const Poly d = kind == InnerProduct::euclidean ? euclidean_dual_li1(r.ideal.g, c)
                                                                   : hermitian_dual_li1(r.ideal.g, c);
                    ASSERT_TRUE(d.is_monic() && is_right_divisor(d, c.modulus(), c.theta())) << where;
                    ASSERT_EQ(D, CanonicalIdeal::li1(d)) << where;
                }
            }
    }
}

TEST(Duality, OrthogonalityLemmas) {
    Rng rng(23);
    for (const auto& gp : testing_support::grid()) {
        const auto c = gp.context();
        const auto& t = c.theta();
        const int n = c.n();
        const auto divisors = monic_right_divisors(c.modulus(), n, false, c);
        int zero_products = 0, nonzero_products = 0;
        for (int k = 0; k < 1000; ++k) {
            Poly a = rng.poly(c.ring(), n - 1);
            Poly b = rng.poly(c.ring(), n - 1);
            if (k % 2 == 0) {
                // Structured pair: a in <g>, b a multiple of h = (x^n - lambda)/g, so a b = 0.
                const Poly& g = divisors[rng.uniform(0, static_cast<int>(divisors.size()) - 1)];
                const Poly h = right_quotient(c.modulus(), g, t);
                a = c.mul(a, g);
                b = c.mul(h, b);
            }
            const bool product_zero = c.mul(a, b).is_zero();
            (product_zero ? zero_products : nonzero_products)++;
            const Word aw = c.to_word(a);
            // v = (b_{n-1}, Theta(b_{n-2}), ..., Theta^{n-1}(b_0)).
            Word v(n), w(n);
            for (int i = 0; i < n; ++i) {
                v[i] = t.apply(b.coeff(n - 1 - i), i);
                w[i] = t.apply(b.coeff(n - 1 - i), i - 1);
            }
            bool orth_e = true, orth_h = c.theta_order() == 2;
            Word sv = v, sw = w;
            for (int s = 0; s < n; ++s) {
                orth_e = orth_e && euclid(aw, sv, c.ring()).is_zero();
                if (c.theta_order() == 2) orth_h = orth_h && inner(aw, sw, InnerProduct::hermitian, c).is_zero();
                sv = c.constashift(sv);
                sw = c.constashift(sw);
            }
            ASSERT_EQ(product_zero, orth_e) << gp.name();
            if (c.theta_order() == 2) {
                ASSERT_EQ(product_zero, orth_h) << gp.name();
            }
        }
        EXPECT_GT(zero_products, 0) << gp.name();
        EXPECT_GT(nonzero_products, 0) << gp.name();
    }
}

TEST(Duality, SelfDualExamples) {
    const auto ctx = f3_context(2, 2);
    const auto uspan = span_from_generators({P("u", ctx)}, ctx);
    EXPECT_EQ(brute_dual(uspan, InnerProduct::euclidean, ctx), uspan);
    EXPECT_EQ(brute_dual(uspan, InnerProduct::hermitian, ctx), uspan);
    EXPECT_EQ(euclidean_dual_ideal(CanonicalIdeal::li2(P("1", ctx)), ctx), CanonicalIdeal::li2(P("1", ctx)));
    for (int beta : {1, 2}) {
        const auto c = f3_context(beta, 2);
        for (const auto& g : monic_right_divisors(c.modulus(), 1, false, c)) {
            if (g.degree() != 1) continue;
            EXPECT_FALSE(is_self_dual_li1(g, InnerProduct::euclidean, c)) << to_string(g);
            EXPECT_NE(brute_dual(span_from_generators({g}, c), InnerProduct::euclidean, c),
                      span_from_generators({g}, c));
        }
    }
    const FpmURing R2 = testing_support::ring_of(2, 1);
    const Context c2(R2, R2.identity(), 2, -R2.one());
    const Poly g = parse_poly("x+1", R2, R2.identity());
    const auto span = span_from_generators({g}, c2);
    EXPECT_EQ(is_self_dual_li1(g, InnerProduct::euclidean, c2), brute_dual(span, InnerProduct::euclidean, c2) == span);
    EXPECT_TRUE(is_self_dual_li1(g, InnerProduct::euclidean, c2));
    EXPECT_THROW(is_self_dual_li1(P("1", ctx), InnerProduct::euclidean, ctx), std::invalid_argument);
    EXPECT_THROW(is_self_dual_li1(P("x+1", f3_context(1, 2)), InnerProduct::hermitian, f3_context(1, 2)),
                 std::invalid_argument);
}

TEST(Duality, SelfDualCriterionMatchesBruteForceOnGrid) {
    for (const auto& gp : testing_support::grid()) {
        const auto c = gp.context();
        for (const auto& r : enumerate_ideals_with_spans(c)) {
            if (r.ideal.type != IdealType::li1) continue;
            for (const auto kind : kinds_for(c)) {
                const bool brute = brute_dual(r.span, kind, c) == r.span;
                if (r.ideal.g.degree() != c.n() / 2) {
                    ASSERT_FALSE(brute) << gp.name() << " " << label(r.ideal, c);
                    continue;
                }
                ASSERT_EQ(is_self_dual_li1(r.ideal.g, kind, c), brute) << gp.name() << " " << label(r.ideal, c);
            }
        }
    }
}
