#ifndef CABCODE_CAB_HPP
#define CABCODE_CAB_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace cabcode {

/// Cyclotomic cosets of p modulo p^m - 1, each sorted ascending, the list
/// sorted by minimal representative. The zero coset {0} is included.
struct CosetTable {
    std::uint64_t p = 0, m = 0, n = 0; // n = p^m - 1
    std::vector<std::vector<std::uint64_t>> cosets;

    const std::vector<std::uint64_t>& coset_of_representative(std::uint64_t i_s) const {
        for (const auto& c : cosets)
            if (c.front() == i_s) return c;
        throw NotARepresentative(std::to_string(i_s) + " is not a minimal coset representative");
    }

    std::vector<std::uint64_t> representatives() const {
        std::vector<std::uint64_t> r;
        r.reserve(cosets.size());
        for (const auto& c : cosets) r.push_back(c.front());
        return r;
    }
};

inline CosetTable cyclotomic_cosets(std::uint64_t p, std::uint64_t m) {
    if (!Field::is_prime(p)) throw NonPrimeBase("coset base " + std::to_string(p) + " is not prime");
    if (m < 2) throw BadRange("cyclotomic cosets need extension degree m >= 2");
    std::uint64_t n = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        n *= p;
        if (n > Field::max_size) throw SizeExceeded("p^m exceeds 2^20");
    }
    n -= 1;
    CosetTable t;
    t.p = p;
    t.m = m;
    t.n = n;
    std::vector<char> seen(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<std::uint64_t> orbit;
        std::uint64_t x = i;
        do {
            orbit.push_back(x);
            seen[x] = 1;
            x = (x * p) % n;
        } while (x != i);
        std::sort(orbit.begin(), orbit.end());
        t.cosets.push_back(std::move(orbit));
    }
    return t;
}

/// F_{i_s}(X) = sum of X^l over the coset of i_s; univariate over the given
/// field. These are exactly the polynomials with coefficients in {0,1} fixed
/// by the Frobenius twist X -> X^p up to exponent rotation, hence they take
/// values in the prime subfield on all of GF(p^m).
inline MultiPoly coset_polynomial(const CosetTable& t, std::uint64_t i_s, const Field& f) {
    if (f.p() != t.p || f.m() != t.m) throw MixedFields("coset table and field sizes differ");
    const auto& coset = t.coset_of_representative(i_s);
    MultiPoly poly(f, 1);
    for (std::uint64_t l : coset) {
        Monomial m(1);
        m.e[0] = static_cast<std::int32_t>(l);
        poly.add_term(m, 1);
    }
    return poly;
}

inline MultiPoly trace_polynomial(const Field& f) {
    // sum of X^(p^j), j = 0..m-1
    MultiPoly poly(f, 1);
    std::uint64_t e = 1;
    for (std::uint64_t j = 0; j < f.m(); ++j) {
        Monomial m(1);
        m.e[0] = static_cast<std::int32_t>(e);
        poly.add_term(m, 1);
        e *= f.p();
    }
    return poly;
}

inline MultiPoly norm_polynomial(const Field& f) {
    Monomial m(1);
    m.e[0] = static_cast<std::int32_t>((f.q() - 1) / (f.p() - 1));
    return MultiPoly::monomial(f, m);
}

/// Exhaustive check that a univariate polynomial maps every field element
/// into the prime subfield.
inline bool is_subfield_valued(const MultiPoly& poly, const Field& f) {
    if (poly.arity() != 1) throw ArityMismatch("subfield-valued check needs a univariate polynomial");
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        std::uint32_t val = poly.eval({x});
        if (!f.in_prime_subfield(val)) return false;
    }
    return true;
}

/// Balanced coset criterion: F_{i_s} takes every prime-subfield value
/// equally often (p^(m-1) times each) exactly when gcd(i_s, p^m - 1) = 1.
inline bool is_balanced(const CosetTable& t, std::uint64_t i_s) {
    if (i_s == 0) throw BadRange("balance is defined for nonzero representatives");
    (void)t.coset_of_representative(i_s); // validates the representative
    return std::gcd(i_s, t.n) == 1;
}

/// Fiber sizes of a univariate polynomial over the whole field, keyed by
/// value representation. Used to cross-check is_balanced.
inline std::map<std::uint32_t, std::size_t> value_fibers(const MultiPoly& poly, const Field& f) {
    std::map<std::uint32_t, std::size_t> fibers;
    for (std::uint32_t x = 0; x < f.q(); ++x) ++fibers[poly.eval({x})];
    return fibers;
}

/// A bivariate polynomial F(X,Y) = G(X) - H(Y) (monic in X^a) together with
/// the weighted order it induces and its zero count over F_q^2. Writing
/// a = deg G, b = deg H, g = gcd(a,b): w(X) = b/g, w(Y) = a/g, and every
/// support monomial other than X^a and Y^b has weight below ab/g. The
/// instance is optimal when the zero count reaches a*q; in that case
/// {F, Y^q - Y} is the reduced Groebner basis of the ideal with field
/// equations and the footprint is the a-by-q box.
struct CabSpec {
    MultiPoly F;
    std::int64_t a = 0, b = 0;
    std::int64_t wx = 0, wy = 0;
    WeightedOrder order;
    std::size_t zeros = 0;
    bool optimal = false;

    CabSpec(MultiPoly f) : F(std::move(f)) {}

    std::vector<MultiPoly> groebner_basis_with_field_equations() const {
        const Field& fld = F.field();
        if (!optimal) {
            IdealSpec ideal(fld, 2, {F}, true);
            return buchberger(ideal, order);
        }
        Monomial yq(2), y1(2);
        yq.e[1] = static_cast<std::int32_t>(fld.q());
        y1.e[1] = 1;
        MultiPoly eq = MultiPoly::monomial(fld, yq);
        eq.add_term(y1, fld.negv(1));
        return {F, eq};
    }
};

inline CabSpec build_generalized_cab(const MultiPoly& g, const MultiPoly& h, const Field& f) {
    if (&g.field() != &f || &h.field() != &f) throw MixedFields("component polynomial over a different field");
    if (g.arity() != 1 || h.arity() != 1) throw ArityMismatch("components must be univariate");
    if (g.is_zero() || h.is_zero()) throw ZeroPolynomial("zero component polynomial");
    std::int64_t a = g.degree(), b = h.degree();
    if (a == b) throw EqualDegrees("deg G = deg H = " + std::to_string(a));
    if (a < 1 || b < 1) throw TrivialPolynomial("components must have degree at least 1");

    auto constant_valued = [&](const MultiPoly& poly) {
        std::uint32_t first = poly.eval({0});
        for (std::uint32_t x = 1; x < f.q(); ++x)
            if (poly.eval({x}) != first) return false;
        return true;
    };
    if (constant_valued(g) || constant_valued(h))
        throw TrivialPolynomial("component polynomial is constant on the field");

    std::int64_t gc = std::gcd(a, b);
    CabSpec spec(MultiPoly::zero(f, 2));
    spec.a = a;
    spec.b = b;
    spec.wx = b / gc;
    spec.wy = a / gc;
    spec.order = WeightedOrder({spec.wx, spec.wy});

    Monomial xa(1);
    xa.e[0] = static_cast<std::int32_t>(a);
    std::uint32_t lc_inv = f.invv(g.coeff(xa).v);
    spec.F = (g.embedded(2, 0) - h.embedded(2, 1)).scaled(lc_inv);

    Monomial topx(2), topy(2);
    topx.e[0] = static_cast<std::int32_t>(a);
    topy.e[1] = static_cast<std::int32_t>(b);
    std::int64_t cap = a * b / gc;
    for (const auto& [m, c] : spec.F.terms()) {
        if (m == topx || m == topy) continue;
        if (spec.order.weight(m) >= cap)
            throw WeightViolation("support monomial " + m.str() + " reaches the top weight");
    }

    // Zero count over F_q^2 by matching value multisets of G and H.
    std::map<std::uint32_t, std::size_t> gvals;
    for (std::uint32_t x = 0; x < f.q(); ++x) ++gvals[g.eval({x})];
    std::size_t zeros = 0;
    for (std::uint32_t y = 0; y < f.q(); ++y) {
        auto it = gvals.find(h.eval({y}));
        if (it != gvals.end()) zeros += it->second;
    }
    spec.zeros = zeros;
    spec.optimal = zeros == static_cast<std::size_t>(a) * f.q();
    return spec;
}

/// Candidate second components for an optimal pair with G = trace: every
/// coset polynomial of degree != deg(trace) plus the norm monomial. Returns
/// the optimal CabSpecs sorted by b.
inline std::vector<CabSpec> list_optimal_cab(const Field& f) {
    CosetTable t = cyclotomic_cosets(f.p(), f.m());
    MultiPoly g = trace_polynomial(f);
    std::int64_t a = g.degree();
    std::vector<CabSpec> out;
    for (std::uint64_t rep : t.representatives()) {
        if (rep == 0) continue;
        MultiPoly h = coset_polynomial(t, rep, f);
        if (h.degree() == a) continue;
        CabSpec spec = build_generalized_cab(g, h, f);
        if (spec.optimal) out.push_back(std::move(spec));
    }
    {
        MultiPoly h = norm_polynomial(f);
        if (h.degree() != a) {
            CabSpec spec = build_generalized_cab(g, h, f);
            if (spec.optimal) out.push_back(std::move(spec));
        }
    }
    std::sort(out.begin(), out.end(), [](const CabSpec& x, const CabSpec& y) { return x.b < y.b; });
    return out;
}

} // namespace cabcode

#endif
