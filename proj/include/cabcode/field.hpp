#ifndef CABCODE_FIELD_HPP
#define CABCODE_FIELD_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cabcode {

/// GF(p^m) with the polynomial-basis representation.
///
/// Elements are stored as integers in [0, q): the digits of the value in
/// base p are the coefficients of the residue polynomial, least significant
/// digit = constant term. Consequently the prime subfield GF(p) is exactly
/// the set of representations 0..p-1, and enumeration order is the base-p
/// counter on coefficient vectors.
///
/// The modulus is the first monic irreducible of degree m found when the
/// non-leading coefficients are counted upward as a base-p integer, so a
/// given (p, m) always produces the same field. Multiplication runs on
/// discrete log tables built from the smallest generator in enumeration
/// order.
///
/// A Field is immutable after construction and is neither copyable nor
/// movable: elements refer to their owner by address.
class Field {
public:
    static constexpr std::uint64_t max_size = 1u << 20;

    Field(std::uint64_t p, std::uint64_t m) : p_(p), m_(m) {
        if (!is_prime(p)) throw NonPrimeBase("field base " + std::to_string(p) + " is not prime");
        if (m == 0) throw BadRange("field extension degree must be at least 1");
        q_ = 1;
        for (std::uint64_t i = 0; i < m; ++i) {
            q_ *= p;
            if (q_ > max_size) throw SizeExceeded("field size p^m exceeds 2^20");
        }
        modulus_ = find_modulus();
        build_log_tables();
    }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    std::uint64_t p() const { return p_; }
    std::uint64_t m() const { return m_; }
    std::uint64_t q() const { return q_; }

    /// Modulus coefficients, ascending degree (size m+1, leading 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    // --- arithmetic on raw representations -------------------------------

    std::uint32_t addv(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, mul = 1;
        for (std::uint64_t i = 0; i < m_; ++i) {
            r += mul * ((a + b) % p_);
            a /= static_cast<std::uint32_t>(p_);
            b /= static_cast<std::uint32_t>(p_);
            mul *= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    std::uint32_t negv(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, mul = 1;
        for (std::uint64_t i = 0; i < m_; ++i) {
            r += mul * ((p_ - a % p_) % p_);
            a /= static_cast<std::uint32_t>(p_);
            mul *= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    std::uint32_t subv(std::uint32_t a, std::uint32_t b) const { return addv(a, negv(b)); }

    std::uint32_t mulv(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = log_[a] + log_[b];
        if (e >= order_) e -= order_;
        return exp_[e];
    }

    std::uint32_t invv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[(order_ - log_[a]) % order_];
    }

    std::uint32_t divv(std::uint32_t a, std::uint32_t b) const { return mulv(a, invv(b)); }

    std::uint32_t powv(std::uint32_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order_)) % order_];
    }

    /// Image of an integer under Z -> GF(p) -> GF(q).
    std::uint32_t from_int(long long k) const {
        long long r = k % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r);
    }

    /// Coefficient vector of an element, ascending (size m).
    std::vector<std::uint32_t> coeffs(std::uint32_t a) const {
        std::vector<std::uint32_t> c(m_);
        for (std::uint64_t i = 0; i < m_; ++i) {
            c[i] = a % static_cast<std::uint32_t>(p_);
            a /= static_cast<std::uint32_t>(p_);
        }
        return c;
    }

    bool in_prime_subfield(std::uint32_t a) const { return a < p_; }

    std::string modulus_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::uint64_t d = m_ + 1; d-- > 0;) {
            std::uint32_t c = modulus_[d];
            if (c == 0) continue;
            if (!first) os << "+";
            first = false;
            if (d == 0 || c > 1) os << c;
            if (d > 0) {
                os << "X";
                if (d > 1) os << "^" << d;
            }
        }
        return os.str();
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_, m_, q_;
    std::uint64_t order_ = 1; // q - 1, or 1 for GF(2)
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_, log_;

    // Plain coefficient-vector product reduced by the modulus; only used
    // while the log tables do not exist yet.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        std::vector<std::uint32_t> prod(2 * m_, 0);
        std::vector<std::uint32_t> ca = coeffs(a), cb = coeffs(b);
        for (std::uint64_t i = 0; i < m_; ++i) {
            if (ca[i] == 0) continue;
            for (std::uint64_t j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
        for (std::uint64_t d = 2 * m_; d-- > m_;) {
            std::uint32_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            // X^d = X^(d-m) * (X^m mod modulus)
            for (std::uint64_t i = 0; i < m_; ++i) {
                std::uint64_t sub = (static_cast<std::uint64_t>(c) * modulus_[i]) % p_;
                prod[d - m_ + i] = static_cast<std::uint32_t>((prod[d - m_ + i] + p_ - sub) % p_);
            }
        }
        std::uint32_t r = 0, mul = 1;
        for (std::uint64_t i = 0; i < m_; ++i) {
            r += mul * prod[i];
            mul *= static_cast<std::uint32_t>(p_);
        }
        return r;
    }

    std::vector<std::uint32_t> find_modulus() const {
        if (m_ == 1) return {0, 1}; // X
        for (std::uint64_t low = 0; low < q_; ++low) {
            std::vector<std::uint32_t> cand(m_ + 1);
            std::uint64_t t = low;
            for (std::uint64_t i = 0; i < m_; ++i) {
                cand[i] = static_cast<std::uint32_t>(t % p_);
                t /= p_;
            }
            cand[m_] = 1;
            if (poly_irreducible(cand)) return cand;
        }
        throw Error("no irreducible modulus found"); // unreachable
    }

    bool poly_irreducible(const std::vector<std::uint32_t>& f) const {
        // Trial division by every monic polynomial of degree 1..m/2.
        for (std::uint64_t d = 1; 2 * d <= m_; ++d) {
            std::uint64_t count = 1;
            for (std::uint64_t i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t low = 0; low < count; ++low) {
                std::vector<std::uint32_t> g(d + 1);
                std::uint64_t t = low;
                for (std::uint64_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(t % p_);
                    t /= p_;
                }
                g[d] = 1;
                if (poly_divides(g, f)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f) const {
        std::uint64_t dg = g.size() - 1;
        while (f.size() > dg && f.size() >= 1) {
            std::uint32_t lead = f.back();
            if (lead != 0) {
                std::uint64_t shift = f.size() - 1 - dg;
                for (std::uint64_t i = 0; i <= dg; ++i) {
                    std::uint64_t sub = (static_cast<std::uint64_t>(lead) * g[i]) % p_;
                    f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p_ - sub) % p_);
                }
            }
            f.pop_back();
        }
        for (std::uint32_t c : f)
            if (c != 0) return false;
        return true;
    }

    void build_log_tables() {
        order_ = q_ - 1;
        if (order_ == 0) order_ = 1;
        exp_.assign(order_, 0);
        log_.assign(q_, 0);
        std::uint32_t gen = 1;
        if (q_ > 2) {
            std::vector<std::uint64_t> prime_factors;
            std::uint64_t t = order_;
            for (std::uint64_t d = 2; d * d <= t; ++d)
                while (t % d == 0) {
                    prime_factors.push_back(d);
                    while (t % d == 0) t /= d;
                    break;
                }
            if (t > 1) prime_factors.push_back(t);
            for (std::uint32_t c = 2; c < q_; ++c) {
                bool ok = true;
                for (std::uint64_t r : prime_factors) {
                    if (slow_pow(c, order_ / r) == 1) { ok = false; break; }
                }
                if (ok) { gen = c; break; }
            }
        }
        std::uint32_t acc = 1;
        for (std::uint64_t e = 0; e < order_; ++e) {
            exp_[e] = acc;
            log_[acc] = static_cast<std::uint32_t>(e);
            acc = slow_mul(acc, gen);
        }
    }

    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

/// A field element: owner pointer plus representation. All operators check
/// that both operands belong to the same Field instance.
struct Element {
    const Field* f = nullptr;
    std::uint32_t v = 0;

    Element() = default;
    Element(const Field& fld, std::uint32_t rep) : f(&fld), v(rep) {}

    bool is_zero() const { return v == 0; }

    friend void check_owner(const Element& a, const Element& b) {
        if (a.f != b.f) throw MixedFields("elements of different fields");
    }
    friend Element operator+(const Element& a, const Element& b) {
        check_owner(a, b);
        return {*a.f, a.f->addv(a.v, b.v)};
    }
    friend Element operator-(const Element& a, const Element& b) {
        check_owner(a, b);
        return {*a.f, a.f->subv(a.v, b.v)};
    }
    friend Element operator*(const Element& a, const Element& b) {
        check_owner(a, b);
        return {*a.f, a.f->mulv(a.v, b.v)};
    }
    friend Element operator/(const Element& a, const Element& b) {
        check_owner(a, b);
        return {*a.f, a.f->divv(a.v, b.v)};
    }
    Element operator-() const { return {*f, f->negv(v)}; }
    friend bool operator==(const Element& a, const Element& b) {
        check_owner(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.v; }
};

/// Horner evaluation of a univariate polynomial given by ascending
/// coefficient representations.
inline std::uint32_t eval_univariate(const Field& f, const std::vector<std::uint32_t>& coeffs,
                                     std::uint32_t x) {
    std::uint32_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        r = f.addv(f.mulv(r, x), coeffs[i]);
    return r;
}

/// Parses a "p^m" field description ("8" alone is rejected; the base must
/// be spelled out, e.g. "2^3").
inline std::pair<std::uint64_t, std::uint64_t> parse_field_spec(const std::string& s) {
    auto caret = s.find('^');
    try {
        if (caret == std::string::npos) {
            std::size_t pos = 0;
            std::uint64_t p = std::stoull(s, &pos);
            if (pos != s.size()) throw ParseError("bad field spec '" + s + "'");
            return {p, 1};
        }
        std::size_t pos = 0;
        std::uint64_t p = std::stoull(s.substr(0, caret), &pos);
        if (pos != caret) throw ParseError("bad field spec '" + s + "'");
        std::uint64_t m = std::stoull(s.substr(caret + 1), &pos);
        if (pos != s.size() - caret - 1) throw ParseError("bad field spec '" + s + "'");
        return {p, m};
    } catch (const std::invalid_argument&) {
        throw ParseError("bad field spec '" + s + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("bad field spec '" + s + "'");
    }
}

} // namespace cabcode

#endif
