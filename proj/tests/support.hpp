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

// Shared fixtures for the test binaries: contexts, seeded random polynomials and the
// context grid {F_2, F_3, F_4} x {n = 2, 4} x {lambda = 1, -1} x {Theta with ord | n}.

#ifndef SKEWCODES_TESTS_SUPPORT_HPP
#define SKEWCODES_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "skewcodes/skewcodes.hpp"

namespace testing_support {

using namespace skewcodes;

inline FpmURing ring_of(int p, int m) { return FpmURing(default_field_params(p, m)); }

/// (F_3 + u F_3)[x; Theta_{s=0, beta}] / <x^n - lambda>.
inline Context f3_context(int beta, int n, int lambda = 1) {
    const FpmURing R = ring_of(3, 1);
    return {R, Automorphism(0, R.field().from_int(beta)), n, R.from_int(lambda)};
}

inline Poly P(const std::string& s, const Context& ctx) { return parse_poly(s, ctx.ring(), ctx.theta()); }

struct GridPoint {
    int p, m, n, lambda;
    Automorphism theta;
    std::string name() const {
        return "F" + std::to_string(p == 2 && m == 2 ? 4 : p) + "_" + theta.to_string() + "_n" + std::to_string(n) +
               "_l" + std::to_string(lambda);
    }
    Context context() const {
        const FpmURing R = ring_of(p, m);
        return {R, theta, n, R.from_int(lambda)};
    }
};

/// Distinct contexts only: lambda = -1 coincides with 1 in characteristic 2.
inline std::vector<GridPoint> grid() {
    std::vector<GridPoint> out;
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}})
        for (const auto& t : enumerate_automorphisms(default_field_params(p, m)))
            for (int n : {2, 4})
                for (int lambda : {1, -1}) {
                    if (n % t.order() != 0 || (p == 2 && lambda == -1)) continue;
                    out.push_back({p, m, n, lambda, t});
                }
    return out;
}

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

    RingElement element(const FpmURing& R) { return R.element(static_cast<std::size_t>(uniform(0, int(R.size()) - 1))); }
    RingElement unit(const FpmURing& R) {
        for (;;) {
            const auto a = element(R);
            if (a.is_unit()) return a;
        }
    }
    /// Random polynomial of degree <= d (possibly lower or zero).
    Poly poly(const FpmURing& R, int d) {
        std::vector<RingElement> c;
        for (int i = 0; i <= d; ++i) c.push_back(element(R));
        return {R, c};
    }
    /// Random polynomial of exact degree d with unit leading coefficient.
    Poly unit_leading_poly(const FpmURing& R, int d) {
        std::vector<RingElement> c;
        for (int i = 0; i < d; ++i) c.push_back(element(R));
        c.push_back(unit(R));
        return {R, c};
    }

   private:
    std::mt19937_64 gen_;
};

}  // namespace testing_support

#endif  // SKEWCODES_TESTS_SUPPORT_HPP
