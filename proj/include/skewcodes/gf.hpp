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
 * @file gf.hpp
 * @brief Prime fields F_p and extension fields F_{p^m} with table-driven arithmetic.
 *
 * A Field is identified by its FieldParams (p, m, monic irreducible modulus). Fields are
 * interned: Field::get returns a reference with static lifetime, so FieldElement can be a
 * cheap (pointer, index) value with no ownership. Elements of different fields never mix;
 * arithmetic on them throws std::invalid_argument.
 *
 * Element indices are chosen so that integer order equals lexicographic order of the
 * coefficient vector (c0, c1, ..., c_{m-1}), least-significant coefficient first.
 */

#ifndef SKEWCODES_GF_HPP
#define SKEWCODES_GF_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcodes {

/// Largest p^m the table-driven field supports.
inline constexpr int kMaxFieldSize = 256;

struct FieldParams {
    int p = 3;
    int m = 1;
    std::vector<int> modulus{0, 1};  // ascending powers of t, monic, length m + 1

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
    friend auto operator<=>(const FieldParams&, const FieldParams&) = default;
};

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int ipow(int base, int e) {
    int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline int mod(long long a, int p) {
    const long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline void trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic, trimmed b over F_p.
inline std::vector<int> fp_poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    trim(a);
    while (a.size() >= b.size()) {
        const int c = a.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
        trim(a);
    }
    return a;
}

}  // namespace detail

/// Exhaustive factor search: true iff the monic polynomial has no monic factor of degree 1..m/2.
inline bool is_irreducible(const std::vector<int>& modulus, int p) {
    const int m = static_cast<int>(modulus.size()) - 1;
    if (m < 1) return false;
    if (m == 1) return true;
    for (int d = 1; d <= m / 2; ++d) {
        const int count = detail::ipow(p, d);
        for (int code = 0; code < count; ++code) {
            std::vector<int> divisor(d + 1);
            divisor[d] = 1;
            int c = code;
            for (int i = 0; i < d; ++i, c /= p) divisor[i] = c % p;
            if (detail::fp_poly_mod(modulus, divisor, p).empty()) return false;
        }
    }
    return true;
}

inline void validate(const FieldParams& params) {
    if (!detail::is_prime(params.p))
        throw std::invalid_argument("field characteristic " + std::to_string(params.p) + " is not prime");
    if (params.m < 1) throw std::invalid_argument("extension degree must be at least 1");
    long long q = 1;
    for (int i = 0; i < params.m; ++i) {
        q *= params.p;
        if (q > kMaxFieldSize)
            throw std::invalid_argument("field size p^m exceeds the supported maximum of " +
                                        std::to_string(kMaxFieldSize));
    }
    if (static_cast<int>(params.modulus.size()) != params.m + 1)
        throw std::invalid_argument("field modulus must have m + 1 coefficients");
    for (int c : params.modulus)
        if (c < 0 || c >= params.p) throw std::invalid_argument("field modulus coefficients must lie in [0, p)");
    if (params.modulus.back() != 1) throw std::invalid_argument("field modulus must be monic");
    if (!is_irreducible(params.modulus, params.p))
        throw std::invalid_argument("field modulus is reducible over F_" + std::to_string(params.p));
}

/// Built-in moduli: t for prime fields, t^2+t+1 for F_4, t^3+t+1 for F_8, t^2+1 for F_9.
inline FieldParams default_field_params(int p, int m) {
    static const std::map<std::pair<int, int>, std::vector<int>> table{
        {{2, 1}, {0, 1}},       {{2, 2}, {1, 1, 1}}, {{2, 3}, {1, 1, 0, 1}}, {{3, 1}, {0, 1}},
        {{3, 2}, {1, 0, 1}},    {{5, 1}, {0, 1}},    {{7, 1}, {0, 1}},
    };
    const auto it = table.find({p, m});
    if (it == table.end())
        throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                                    "; supply one explicitly");
    return FieldParams{p, m, it->second};
}

class Field;

class FieldElement {
   public:
    FieldElement() = default;

    const Field& field() const;
    bool attached() const noexcept { return field_ != nullptr; }
    int index() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept;
    std::vector<int> coeffs() const;

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    /// a^(p^s); s is reduced modulo m, negative values allowed.
    FieldElement frobenius(int s) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        if (auto c = a.v_ <=> b.v_; c != 0) return c;
        return std::compare_three_way{}(a.field_, b.field_);
    }

    /// Integer for prime fields, "[c0,c1,...]" for extensions.
    std::string to_string() const;

   private:
    friend class Field;
    FieldElement(const Field* f, int v) : field_(f), v_(static_cast<std::uint16_t>(v)) {}
    const Field& checked_field(const FieldElement& other) const;

    const Field* field_ = nullptr;
    std::uint16_t v_ = 0;
};

class Field {
   public:
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    /// Interned field for the given parameters; validates them on first use.
    static const Field& get(const FieldParams& params) {
        static std::mutex mu;
        static std::map<FieldParams, std::unique_ptr<const Field>> registry;
        std::lock_guard lock(mu);
        auto it = registry.find(params);
        if (it == registry.end()) {
            validate(params);
            it = registry.emplace(params, std::unique_ptr<const Field>(new Field(params))).first;
        }
        return *it->second;
    }
    static const Field& get(int p, int m) { return get(default_field_params(p, m)); }

    const FieldParams& params() const noexcept { return params_; }
    int characteristic() const noexcept { return params_.p; }
    int degree() const noexcept { return params_.m; }
    int size() const noexcept { return q_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, one_}; }
    FieldElement element(int index) const {
        if (index < 0 || index >= q_) throw std::out_of_range("field element index out of range");
        return {this, index};
    }
    /// The image of an integer under Z -> F_p -> F_{p^m}.
    FieldElement from_int(long long k) const { return from_coeffs(std::vector<int>{detail::mod(k, params_.p)}); }
    /// Coefficients in ascending powers of t; missing entries are zero, all entries reduced mod p.
    FieldElement from_coeffs(std::span<const int> coeffs) const {
        if (static_cast<int>(coeffs.size()) > params_.m)
            throw std::invalid_argument("too many coefficients for F_" + std::to_string(q_));
        std::vector<int> c(params_.m, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = detail::mod(coeffs[i], params_.p);
        return {this, index_of(c)};
    }
    /// t, which generates F_{p^m} over F_p (1 for prime fields).
    FieldElement generator() const {
        if (params_.m == 1) return one();
        std::vector<int> c(params_.m, 0);
        c[1] = 1;
        return {this, index_of(c)};
    }
    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out;
        out.reserve(q_);
        for (int i = 0; i < q_; ++i) out.push_back({this, i});
        return out;
    }

   private:
    friend class FieldElement;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

    explicit Field(FieldParams params) : params_(std::move(params)) {
        const int p = params_.p;
        const int m = params_.m;
        q_ = detail::ipow(p, m);
        one_ = index_of(unit_vector(m));
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        std::vector<int> modulus = params_.modulus;
        for (int a = 0; a < q_; ++a) {
            const auto ca = coeffs_of(a);
            std::vector<int> cn(m);
            for (int i = 0; i < m; ++i) cn[i] = detail::mod(-ca[i], p);
            neg_[a] = static_cast<std::uint16_t>(index_of(cn));
            for (int b = 0; b < q_; ++b) {
                const auto cb = coeffs_of(b);
                std::vector<int> sum(m);
                for (int i = 0; i < m; ++i) sum[i] = (ca[i] + cb[i]) % p;
                add_[a * q_ + b] = static_cast<std::uint16_t>(index_of(sum));
                std::vector<int> prod(2 * m - 1, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
                auto rem = detail::fp_poly_mod(prod, modulus, p);
                rem.resize(m, 0);
                mul_[a * q_ + b] = static_cast<std::uint16_t>(index_of(rem));
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == one_) inv_[a] = static_cast<std::uint16_t>(b);
        frob_.resize(static_cast<std::size_t>(m) * q_);
        for (int a = 0; a < q_; ++a) {
            int cur = a;
            for (int s = 0; s < m; ++s) {
                frob_[s * q_ + a] = static_cast<std::uint16_t>(cur);
                int next = one_;
                for (int k = 0; k < p; ++k) next = mul_[next * q_ + cur];
                cur = next;
            }
        }
    }

    static std::vector<int> unit_vector(int m) {
        std::vector<int> c(m, 0);
        c[0] = 1;
        return c;
    }
    std::vector<int> coeffs_of(int idx) const {
        std::vector<int> c(params_.m);
        for (int i = params_.m - 1; i >= 0; --i) {
            c[i] = idx % params_.p;
            idx /= params_.p;
        }
        return c;
    }
    int index_of(const std::vector<int>& c) const {
        int idx = 0;
        for (int i = 0; i < params_.m; ++i) idx = idx * params_.p + c[i];
        return idx;
    }

    FieldParams params_;
    int q_ = 0;
    int one_ = 0;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_, frob_;
};

inline const Field& FieldElement::field() const {
    if (!field_) throw std::logic_error("field element is not attached to a field");
    return *field_;
}

inline const Field& FieldElement::checked_field(const FieldElement& other) const {
    if (!field_ || field_ != other.field_) throw std::invalid_argument("field elements belong to different fields");
    return *field_;
}

inline bool FieldElement::is_one() const noexcept { return field_ && v_ == field_->one_; }

inline std::vector<int> FieldElement::coeffs() const { return field().coeffs_of(v_); }

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field& f = a.checked_field(b);
    return {&f, f.add_[a.v_ * f.q_ + b.v_]};
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field& f = a.checked_field(b);
    return {&f, f.add_[a.v_ * f.q_ + f.neg_[b.v_]]};
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field& f = a.checked_field(b);
    return {&f, f.mul_[a.v_ * f.q_ + b.v_]};
}

inline FieldElement FieldElement::operator-() const {
    const Field& f = field();
    return {&f, f.neg_[v_]};
}

inline FieldElement FieldElement::inverse() const {
    const Field& f = field();
    if (v_ == 0) throw std::domain_error("zero has no multiplicative inverse");
    return {&f, f.inv_[v_]};
}

inline FieldElement FieldElement::pow(long long e) const {
    const Field& f = field();
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    FieldElement r = f.one();
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

inline FieldElement FieldElement::frobenius(int s) const {
    const Field& f = field();
    const int m = f.params_.m;
    const int k = ((s % m) + m) % m;
    return {&f, f.frob_[k * f.q_ + v_]};
}

inline std::string FieldElement::to_string() const {
    const auto c = coeffs();
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + "]";
}

}  // namespace skewcodes

template <>
struct std::hash<skewcodes::FieldElement> {
    std::size_t operator()(const skewcodes::FieldElement& a) const noexcept {
        return std::hash<int>{}(a.index()) ^ (a.attached() ? std::hash<const void*>{}(&a.field()) << 1 : 0);
    }
};

#endif  // SKEWCODES_GF_HPP
