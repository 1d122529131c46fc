#ifndef CABCODE_MONOMIAL_HPP
#define CABCODE_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cabcode {

/// Exponent vector. operator< is the plain lexicographic comparison on the
/// vector and exists only so monomials can key ordered containers; the
/// semantically meaningful comparison lives in WeightedOrder.
struct Monomial {
    std::vector<std::int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : e(arity, 0) {}
    Monomial(std::initializer_list<std::int32_t> l) : e(l) {}

    std::size_t arity() const { return e.size(); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
    }
    std::int64_t total_degree() const {
        std::int64_t s = 0;
        for (auto x : e) s += x;
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e == b.e); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.arity() != b.arity()) throw ArityMismatch("monomial product across arities");
        Monomial r(a.arity());
        for (std::size_t k = 0; k < a.arity(); ++k) r.e[k] = a.e[k] + b.e[k];
        return r;
    }

    bool divisible_by(const Monomial& d) const {
        if (arity() != d.arity()) throw ArityMismatch("divisibility across arities");
        for (std::size_t k = 0; k < arity(); ++k)
            if (e[k] < d.e[k]) return false;
        return true;
    }

    Monomial divided_by(const Monomial& d) const {
        if (!divisible_by(d)) throw BadRange("monomial quotient does not exist");
        Monomial r(arity());
        for (std::size_t k = 0; k < arity(); ++k) r.e[k] = e[k] - d.e[k];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        if (a.arity() != b.arity()) throw ArityMismatch("lcm across arities");
        Monomial r(a.arity());
        for (std::size_t k = 0; k < a.arity(); ++k) r.e[k] = std::max(a.e[k], b.e[k]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t k = 0; k < a.arity(); ++k)
            if (a.e[k] > 0 && b.e[k] > 0) return false;
        return true;
    }

    /// -1 if not a pure power, else the index of the single variable with a
    /// positive exponent. The constant monomial is not a pure power.
    int pure_power_variable() const {
        int var = -1;
        for (std::size_t k = 0; k < arity(); ++k) {
            if (e[k] == 0) continue;
            if (var >= 0) return -1;
            var = static_cast<int>(k);
        }
        return var;
    }

    std::string str() const {
        if (is_one()) return "1";
        static const char* names[4] = {"X", "Y", "Z", "W"};
        std::string s;
        for (std::size_t k = 0; k < arity(); ++k) {
            if (e[k] == 0) continue;
            if (arity() <= 4) s += names[k];
            else s += "X" + std::to_string(k + 1);
            if (e[k] != 1) s += "^" + std::to_string(e[k]);
        }
        return s;
    }
};

/// Weighted degree ordering: compare total weights first, break ties by the
/// lexicographic order in which the last variable is smallest (equivalently,
/// compare exponents of X1 first; a smaller X1 exponent means a smaller
/// monomial). With positive weights this is a monomial well-order.
struct WeightedOrder {
    std::vector<std::int64_t> weights;

    WeightedOrder() = default;
    explicit WeightedOrder(std::vector<std::int64_t> w) : weights(std::move(w)) {
        for (auto x : weights)
            if (x <= 0) throw BadRange("order weights must be positive");
    }

    std::size_t arity() const { return weights.size(); }

    std::int64_t weight(const Monomial& m) const {
        if (m.arity() != weights.size()) throw ArityMismatch("monomial arity vs order weights");
        std::int64_t w = 0;
        for (std::size_t k = 0; k < weights.size(); ++k) w += weights[k] * m.e[k];
        return w;
    }

    /// -1, 0 or 1.
    int compare(const Monomial& a, const Monomial& b) const {
        std::int64_t wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb ? -1 : 1;
        for (std::size_t k = 0; k < a.arity(); ++k)
            if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? -1 : 1;
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    /// Strict comparator usable as an ordered-container predicate.
    struct Less {
        const WeightedOrder* ord;
        bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(a, b); }
    };
    Less less_fn() const { return Less{this}; }
};

} // namespace cabcode

#endif
