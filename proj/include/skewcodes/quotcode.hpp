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
 * @file quotcode.hpp
 * @brief Skew constacyclic codes as left ideals of R[x; Theta] / <x^n - lambda>.
 *
 * A CodeContext fixes (R, Theta, n, lambda) and checks that x^n - lambda is central.
 * Codewords are length-n vectors over R, identified with polynomials of degree < n.
 *
 * CodeSpan is the brute-force side: the full set of codewords of a left ideal, stored as
 * sorted integer codes in a WordSpace (base-|R| packing, entry 0 most significant, so
 * code order equals lexicographic word order). Everything built on it refuses to run
 * when |R|^n exceeds the context's max_vectors bound.
 */

#ifndef SKEWCODES_QUOTCODE_HPP
#define SKEWCODES_QUOTCODE_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewpoly.hpp"

namespace skewcodes {

/// The parameters do not define a quotient ring in which codes are left ideals.
class ContextError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed the configured vector bound.
class BoundError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxVectors = 1'000'000;

template <chain_ring Ring>
class WordSpace {
   public:
    using element_type = typename Ring::element_type;
    using Word = std::vector<element_type>;

    WordSpace(const Ring& ring, int n, std::uint64_t max_vectors) : ring_(ring), n_(n), q_(ring.size()) {
        total_ = 1;
        for (int i = 0; i < n; ++i) {
            if (total_ > max_vectors / q_) throw_bound(max_vectors);
            total_ *= q_;
        }
        if (total_ > max_vectors) throw_bound(max_vectors);
        elems_.reserve(q_);
        for (std::uint64_t i = 0; i < q_; ++i) elems_.push_back(ring.element(i));
        if (q_ <= 256) {
            add_.resize(q_ * q_);
            mul_.resize(q_ * q_);
            for (std::uint64_t a = 0; a < q_; ++a)
                for (std::uint64_t b = 0; b < q_; ++b) {
                    add_[a * q_ + b] = static_cast<std::uint32_t>(ring.index(elems_[a] + elems_[b]));
                    mul_[a * q_ + b] = static_cast<std::uint32_t>(ring.index(elems_[a] * elems_[b]));
                }
        }
    }

    const Ring& ring() const noexcept { return ring_; }
    int length() const noexcept { return n_; }
    std::uint64_t alphabet() const noexcept { return q_; }
    std::uint64_t total() const noexcept { return total_; }

    std::uint64_t encode(const Word& w) const {
        std::uint64_t c = 0;
        for (int i = 0; i < n_; ++i) c = c * q_ + ring_.index(w[i]);
        return c;
    }
    Word decode(std::uint64_t c) const {
        Word w(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            w[i] = elems_[c % q_];
            c /= q_;
        }
        return w;
    }
    std::vector<std::uint32_t> digits(std::uint64_t c) const {
        std::vector<std::uint32_t> d(n_);
        for (int i = n_ - 1; i >= 0; --i) {
            d[i] = static_cast<std::uint32_t>(c % q_);
            c /= q_;
        }
        return d;
    }
    std::uint64_t pack(const std::vector<std::uint32_t>& d) const {
        std::uint64_t c = 0;
        for (int i = 0; i < n_; ++i) c = c * q_ + d[i];
        return c;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (!add_.empty()) return add_[a * q_ + b];
        return static_cast<std::uint32_t>(ring_.index(elems_[a] + elems_[b]));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!mul_.empty()) return mul_[a * q_ + b];
        return static_cast<std::uint32_t>(ring_.index(elems_[a] * elems_[b]));
    }
    std::uint64_t add_codes(std::uint64_t x, std::uint64_t y) const {
        auto dx = digits(x);
        const auto dy = digits(y);
        for (int i = 0; i < n_; ++i) dx[i] = add(dx[i], dy[i]);
        return pack(dx);
    }
    std::uint64_t scale_code(std::uint32_t a, std::uint64_t x) const {
        auto dx = digits(x);
        for (int i = 0; i < n_; ++i) dx[i] = mul(a, dx[i]);
        return pack(dx);
    }

   private:
    [[noreturn]] void throw_bound(std::uint64_t max_vectors) const {
        throw BoundError("|R|^n = " + std::to_string(q_) + "^" + std::to_string(n_) +
                         " exceeds the brute-force bound of " + std::to_string(max_vectors) + " vectors");
    }

    Ring ring_;
    int n_;
    std::uint64_t q_;
    std::uint64_t total_ = 1;
    std::vector<element_type> elems_;
    std::vector<std::uint32_t> add_, mul_;
};

/// The full, sorted codeword set of a submodule of R^n.
template <chain_ring Ring>
class CodeSpan {
   public:
    using Word = typename WordSpace<Ring>::Word;

    CodeSpan(std::shared_ptr<const WordSpace<Ring>> space, std::vector<std::uint64_t> codes)
        : space_(std::move(space)), codes_(std::move(codes)) {
        std::sort(codes_.begin(), codes_.end());
        codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
    }

    const WordSpace<Ring>& space() const noexcept { return *space_; }
    const std::shared_ptr<const WordSpace<Ring>>& space_ptr() const noexcept { return space_; }
    const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
    std::size_t size() const noexcept { return codes_.size(); }

    bool contains_code(std::uint64_t c) const { return std::binary_search(codes_.begin(), codes_.end(), c); }
    bool contains(const Word& w) const { return contains_code(space_->encode(w)); }

    std::vector<Word> words() const {
        std::vector<Word> out;
        out.reserve(codes_.size());
        for (auto c : codes_) out.push_back(space_->decode(c));
        return out;
    }

    bool subset_of(const CodeSpan& other) const {
        return std::includes(other.codes_.begin(), other.codes_.end(), codes_.begin(), codes_.end());
    }

    friend bool operator==(const CodeSpan& a, const CodeSpan& b) { return a.codes_ == b.codes_; }

   private:
    std::shared_ptr<const WordSpace<Ring>> space_;
    std::vector<std::uint64_t> codes_;
};

template <class E>
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<E> data;

    Matrix(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), data(r * c, fill) {}
    E& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const E& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::vector<E> row(std::size_t i) const {
        return {data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)};
    }
};

/// R[x; Theta] / <x^n - lambda> with x^n - lambda central.
template <chain_ring Ring>
class CodeContext {
   public:
    using element_type = typename Ring::element_type;
    using automorphism_type = typename Ring::automorphism_type;
    using poly_type = SkewPoly<Ring>;
    using Word = std::vector<element_type>;

    CodeContext(Ring ring, automorphism_type theta, int n, element_type lambda,
                std::uint64_t max_vectors = kDefaultMaxVectors)
        : ring_(std::move(ring)),
          theta_(std::move(theta)),
          n_(n),
          lambda_(std::move(lambda)),
          max_vectors_(max_vectors),
          modulus_(ring_),
          lazy_(std::make_shared<Lazy>()) {
        if (n_ < 1) throw ContextError("n must be a positive integer");
        if (!ring_.is_unit(lambda_)) throw ContextError("lambda must be a unit");
        if (!(ring_.apply(theta_, lambda_, 1) == lambda_)) throw ContextError("lambda must be fixed by Theta");
        const int ord = ring_.order(theta_);
        if (n_ % ord != 0) throw ContextError("n must be a multiple of ord(Theta) = " + std::to_string(ord));
        modulus_ = poly_type::x(ring_, n_) - poly_type::constant(ring_, lambda_);
    }

    const Ring& ring() const noexcept { return ring_; }
    const automorphism_type& theta() const noexcept { return theta_; }
    int n() const noexcept { return n_; }
    const element_type& lambda() const noexcept { return lambda_; }
    std::uint64_t max_vectors() const noexcept { return max_vectors_; }
    int theta_order() const { return ring_.order(theta_); }

    /// x^n - lambda.
    const poly_type& modulus() const noexcept { return modulus_; }

    poly_type zero_poly() const { return poly_type(ring_); }
    poly_type one_poly() const { return poly_type::constant(ring_, ring_.one()); }

    poly_type reduce(const poly_type& f) const { return right_divmod(f, modulus_, theta_).r; }
    poly_type mul(const poly_type& a, const poly_type& b) const { return reduce(skew_mul(a, b, theta_)); }

    Word to_word(const poly_type& f) const {
        const poly_type r = reduce(f);
        Word w(n_, ring_.zero());
        for (int i = 0; i <= r.degree(); ++i) w[i] = r.coeff(i);
        return w;
    }
    poly_type to_poly(const Word& w) const {
        if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("word length differs from n");
        return {ring_, w};
    }

    /// (Theta(lambda a_{n-1}), Theta(a_0), ..., Theta(a_{n-2})).
    Word constashift(const Word& a) const {
        if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("word length differs from n");
        Word out(n_);
        out[0] = ring_.apply(theta_, lambda_ * a[n_ - 1], 1);
        for (int i = 1; i < n_; ++i) out[i] = ring_.apply(theta_, a[i - 1], 1);
        return out;
    }

    /// Shared codeword space; throws BoundError when |R|^n exceeds max_vectors.
    std::shared_ptr<const WordSpace<Ring>> space() const {
        std::call_once(lazy_->once, [&] {
            try {
                lazy_->space = std::make_shared<const WordSpace<Ring>>(ring_, n_, max_vectors_);
            } catch (const BoundError& e) {
                lazy_->error = e.what();
            }
        });
        if (!lazy_->space) throw BoundError(lazy_->error);
        return lazy_->space;
    }

   private:
    struct Lazy {
        std::once_flag once;
        std::shared_ptr<const WordSpace<Ring>> space;
        std::string error;
    };

    Ring ring_;
    automorphism_type theta_;
    int n_;
    element_type lambda_;
    std::uint64_t max_vectors_;
    poly_type modulus_;
    std::shared_ptr<Lazy> lazy_;
};

using Context = CodeContext<FpmURing>;

template <chain_ring Ring>
typename CodeContext<Ring>::poly_type reduce_mod(const typename CodeContext<Ring>::poly_type& f,
                                                 const CodeContext<Ring>& ctx) {
    return ctx.reduce(f);
}

/// R-span of the given codes: the closure of {0} under adding R-multiples of each code.
template <chain_ring Ring>
CodeSpan<Ring> span_of_codes(const std::shared_ptr<const WordSpace<Ring>>& space,
                             const std::vector<std::uint64_t>& gens) {
    const WordSpace<Ring>& ws = *space;
    std::vector<bool> member(ws.total(), false);
    std::vector<std::uint64_t> list{0};
    member[0] = true;
    for (const auto v : gens) {
        if (member[v]) continue;
        std::vector<std::uint64_t> multiples;
        for (std::uint32_t a = 0; a < ws.alphabet(); ++a) {
            const auto av = ws.scale_code(a, v);
            if (av != 0) multiples.push_back(av);
        }
        std::sort(multiples.begin(), multiples.end());
        multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());
        const std::size_t old = list.size();
        for (std::size_t i = 0; i < old; ++i) {
            const auto s = ws.digits(list[i]);
            for (const auto av : multiples) {
                const auto d = ws.digits(av);
                std::vector<std::uint32_t> sum(s.size());
                for (std::size_t k = 0; k < s.size(); ++k) sum[k] = ws.add(s[k], d[k]);
                const auto c = ws.pack(sum);
                if (!member[c]) {
                    member[c] = true;
                    list.push_back(c);
                }
            }
        }
    }
    return {space, std::move(list)};
}

/// The smallest left ideal containing the generators: R-span of reduce(x^i g), 0 <= i < n.
template <chain_ring Ring>
CodeSpan<Ring> span_from_generators(const std::vector<SkewPoly<Ring>>& gens, const CodeContext<Ring>& ctx) {
    const auto space = ctx.space();
    std::vector<std::uint64_t> orbit;
    for (const auto& g : gens) {
        auto cur = ctx.reduce(g);
        for (int i = 0; i < ctx.n(); ++i) {
            orbit.push_back(space->encode(ctx.to_word(cur)));
            cur = ctx.mul(SkewPoly<Ring>::x(ctx.ring()), cur);
        }
    }
    return span_of_codes(space, orbit);
}

/// Closed under the constacyclic shift and under multiplication by every scalar.
template <chain_ring Ring>
bool is_left_ideal(const CodeSpan<Ring>& span, const CodeContext<Ring>& ctx) {
    const auto& ws = span.space();
    if (!span.contains_code(0)) return false;
    for (const auto c : span.codes())
        if (!span.contains(ctx.constashift(ws.decode(c)))) return false;
    // The R-span of the members equals the set iff it is closed under sums and scalars.
    return span_of_codes(span.space_ptr(), span.codes()) == span;
}

namespace detail {

template <chain_ring Ring>
void require_monic_divisor(const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    if (!g.is_monic() || !is_right_divisor(g, ctx.modulus(), ctx.theta()))
        throw std::invalid_argument("generator must be a monic right divisor of x^n - lambda");
}

}  // namespace detail

/// Row i is x^i g, for 0 <= i < n - deg g.
template <chain_ring Ring>
Matrix<typename Ring::element_type> generator_matrix(const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    detail::require_monic_divisor(g, ctx);
    const int k = ctx.n() - g.degree();
    Matrix<typename Ring::element_type> G(k, ctx.n(), ctx.ring().zero());
    auto row = g;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= row.degree(); ++j) G.at(i, j) = row.coeff(j);
        row = skew_mul(SkewPoly<Ring>::x(ctx.ring()), row, ctx.theta());
    }
    return G;
}

/// h = (x^n - lambda) / g, k = deg h; row r holds Theta^{r+j}(h_{k-j}) in column r + j.
template <chain_ring Ring>
Matrix<typename Ring::element_type> parity_check_matrix(const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    detail::require_monic_divisor(g, ctx);
    const auto h = right_quotient(ctx.modulus(), g, ctx.theta());
    const int k = h.degree();
    const int rows = ctx.n() - k;
    Matrix<typename Ring::element_type> H(rows, ctx.n(), ctx.ring().zero());
    for (int r = 0; r < rows; ++r)
        for (int j = 0; j <= k; ++j) H.at(r, r + j) = ctx.ring().apply(ctx.theta(), h.coeff(k - j), r + j);
    return H;
}

/// c lies in <g> iff c h = 0 in the quotient, h = (x^n - lambda) / g.
template <chain_ring Ring>
bool member_via_check(const SkewPoly<Ring>& c, const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    detail::require_monic_divisor(g, ctx);
    const auto h = right_quotient(ctx.modulus(), g, ctx.theta());
    return ctx.mul(c, h).is_zero();
}

/// Every coefficient of g is fixed by Theta.
template <chain_ring Ring>
bool is_classically_constacyclic(const SkewPoly<Ring>& g, const CodeContext<Ring>& ctx) {
    detail::require_monic_divisor(g, ctx);
    return std::all_of(g.coeffs().begin(), g.coeffs().end(),
                       [&](const auto& a) { return ctx.ring().apply(ctx.theta(), a, 1) == a; });
}

}  // namespace skewcodes

#endif  // SKEWCODES_QUOTCODE_HPP
