#ifndef CABCODE_GROEBNER_HPP
#define CABCODE_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace cabcode {

/// Generators of an ideal in F_q[X_1..X_arity], optionally together with the
/// field equations X_k^q - X_k (which pin the variety inside F_q^arity and
/// make footprints finite).
struct IdealSpec {
    const Field* field = nullptr;
    std::size_t arity = 0;
    std::vector<MultiPoly> generators;
    bool include_field_equations = true;

    IdealSpec(const Field& f, std::size_t ar, std::vector<MultiPoly> gens, bool with_field_eqs = true)
        : field(&f), arity(ar), generators(std::move(gens)), include_field_equations(with_field_eqs) {
        for (const auto& g : generators) {
            if (&g.field() != field) throw MixedFields("ideal generator over a different field");
            if (g.arity() != arity) throw ArityMismatch("ideal generator of wrong arity");
        }
    }

    std::vector<MultiPoly> all_generators() const {
        std::vector<MultiPoly> gens = generators;
        if (include_field_equations) {
            for (std::size_t k = 0; k < arity; ++k) {
                Monomial hi(arity), lo(arity);
                hi.e[k] = static_cast<std::int32_t>(field->q());
                lo.e[k] = 1;
                MultiPoly eq = MultiPoly::monomial(*field, hi);
                eq.add_term(lo, field->negv(1));
                gens.push_back(eq);
            }
        }
        return gens;
    }
};

namespace detail {

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const WeightedOrder& ord) {
    // Both inputs monic.
    Monomial lf = f.leading_monomial(ord), lg = g.leading_monomial(ord);
    Monomial L = lcm(lf, lg);
    return f.times_term(L.divided_by(lf), 1) - g.times_term(L.divided_by(lg), 1);
}

} // namespace detail

/// Buchberger's algorithm with the coprime-leading-monomial criterion,
/// followed by minimalization and full inter-reduction. The result is the
/// reduced Groebner basis: monic, mutually irreducible, sorted by leading
/// monomial ascending, hence independent of generator order.
inline std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, const WeightedOrder& ord,
                                         std::size_t pair_budget = 200000) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(ord));
    if (basis.empty()) throw ZeroPolynomial("ideal has no nonzero generator");

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (++processed > pair_budget) throw BudgetExceeded("Buchberger pair budget exceeded");
        if (coprime(basis[i].leading_monomial(ord), basis[j].leading_monomial(ord))) continue;
        MultiPoly s = detail::s_polynomial(basis[i], basis[j], ord);
        if (s.is_zero()) continue;
        MultiPoly r = normal_form(s, basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(r.monic(ord));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another one. Processing by ascending leading monomial keeps divisors.
    std::sort(basis.begin(), basis.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    std::vector<MultiPoly> minimal;
    for (const auto& g : basis) {
        Monomial lm = g.leading_monomial(ord);
        bool redundant = false;
        for (const auto& kept : minimal)
            if (lm.divisible_by(kept.leading_monomial(ord))) { redundant = true; break; }
        if (!redundant) minimal.push_back(g);
    }

    // Inter-reduce tails until stable.
    for (int round = 0; round < 100; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MultiPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MultiPoly r = normal_form(minimal[i], others, ord).monic(ord);
            if (r != minimal[i]) { minimal[i] = r; changed = true; }
        }
        if (!changed) break;
        if (round == 99) throw Error("inter-reduction failed to stabilize");
    }
    std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return minimal;
}

inline std::vector<MultiPoly> buchberger(const IdealSpec& ideal, const WeightedOrder& ord,
                                         std::size_t pair_budget = 200000) {
    return buchberger(ideal.all_generators(), ord, pair_budget);
}

/// The monomials outside the leading-term ideal of a Groebner basis, sorted
/// ascending by the order, with 1-based index lookup (indices follow the
/// enumeration M_1 < M_2 < ... used throughout the bound machinery).
struct Footprint {
    WeightedOrder ord;
    std::vector<Monomial> monomials; // ascending under ord
    std::map<Monomial, int> index;   // 1-based

    int n() const { return static_cast<int>(monomials.size()); }

    const Monomial& at(int i) const {
        if (i < 1 || i > n()) throw NotInFootprint("footprint index out of range");
        return monomials[static_cast<std::size_t>(i - 1)];
    }

    std::int64_t weight(int i) const { return ord.weight(at(i)); }

    int index_of(const Monomial& m) const {
        auto it = index.find(m);
        if (it == index.end()) throw NotInFootprint("monomial " + m.str() + " not in footprint");
        return it->second;
    }

    bool contains(const Monomial& m) const { return index.count(m) != 0; }
};

/// Footprint of a Groebner basis. Throws InfiniteFootprint unless every
/// variable has a pure power among the leading monomials.
inline Footprint footprint(const std::vector<MultiPoly>& gb, const WeightedOrder& ord,
                           std::size_t size_guard = 1u << 22) {
    if (gb.empty()) throw ZeroPolynomial("footprint of empty basis");
    std::size_t arity = gb.front().arity();
    std::vector<Monomial> lms;
    lms.reserve(gb.size());
    for (const auto& g : gb) lms.push_back(g.leading_monomial(ord));
    for (const auto& lm : lms)
        if (lm.is_one()) { Footprint fp; fp.ord = ord; return fp; } // unit ideal

    std::vector<std::int64_t> box(arity, -1);
    for (const auto& lm : lms) {
        int var = lm.pure_power_variable();
        if (var < 0) continue;
        std::int64_t e = lm.e[static_cast<std::size_t>(var)];
        if (box[static_cast<std::size_t>(var)] < 0 || e < box[static_cast<std::size_t>(var)])
            box[static_cast<std::size_t>(var)] = e;
    }
    std::size_t cells = 1;
    for (std::size_t k = 0; k < arity; ++k) {
        if (box[k] < 0)
            throw InfiniteFootprint("no pure power of variable " + std::to_string(k + 1) +
                                    " among leading monomials");
        if (box[k] == 0) { cells = 0; break; }
        if (cells > size_guard / static_cast<std::size_t>(box[k]))
            throw SizeExceeded("footprint bounding box exceeds guard");
        cells *= static_cast<std::size_t>(box[k]);
    }

    Footprint fp;
    fp.ord = ord;
    Monomial m(arity);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        bool excluded = false;
        for (const auto& lm : lms)
            if (m.divisible_by(lm)) { excluded = true; break; }
        if (!excluded) fp.monomials.push_back(m);
        for (std::size_t k = 0; k < arity; ++k) {
            if (++m.e[k] < box[k]) break;
            m.e[k] = 0;
        }
    }
    std::sort(fp.monomials.begin(), fp.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return fp.ord.less(a, b); });
    for (std::size_t i = 0; i < fp.monomials.size(); ++i)
        fp.index.emplace(fp.monomials[i], static_cast<int>(i + 1));
    return fp;
}

/// Order-domain test pair. C1 is evaluated on the reduced Groebner basis of
/// the generators exactly as given (the curve ideal, no field equations):
/// every element must have exactly two monomials of maximal weight. C2 needs
/// a finite monomial complement, so it is evaluated on the footprint with
/// the field equations adjoined: no two footprint monomials may share a
/// weight.
inline std::pair<bool, bool> order_domain_check(const std::vector<MultiPoly>& gens,
                                                const WeightedOrder& ord) {
    std::vector<MultiPoly> gb = buchberger(gens, ord);
    bool c1 = true;
    for (const auto& g : gb)
        if (g.top_weight_count(ord) != 2) { c1 = false; break; }

    const Field& f = gb.front().field();
    IdealSpec with_eqs(f, gb.front().arity(), gb, true);
    Footprint fp = footprint(buchberger(with_eqs, ord), ord);
    bool c2 = true;
    std::map<std::int64_t, int> seen;
    for (int i = 1; i <= fp.n(); ++i)
        if (++seen[fp.weight(i)] > 1) { c2 = false; break; }
    return {c1, c2};
}

/// All common zeros of the ideal's generators in F_q^arity, in ascending
/// lexicographic order of coordinate representations (first coordinate most
/// significant). Field equations vanish identically on the grid and are
/// skipped. Guard: arity <= 3 and q^arity <= 2^22.
inline std::vector<std::vector<std::uint32_t>> variety_points(const IdealSpec& ideal) {
    const Field& f = *ideal.field;
    if (ideal.arity == 0 || ideal.arity > 3) throw SizeExceeded("variety enumeration supports arity 1..3");
    double size = 1;
    for (std::size_t k = 0; k < ideal.arity; ++k) size *= static_cast<double>(f.q());
    if (size > static_cast<double>(1u << 22)) throw SizeExceeded("q^arity exceeds 2^22");

    // Precompute coordinate powers up to the largest exponent used.
    std::int32_t max_exp = 1;
    for (const auto& g : ideal.generators)
        for (const auto& [m, c] : g.terms())
            for (auto e : m.e) max_exp = std::max(max_exp, e);
    std::vector<std::vector<std::uint32_t>> pow(f.q(), std::vector<std::uint32_t>(static_cast<std::size_t>(max_exp) + 1));
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        pow[x][0] = 1;
        for (std::int32_t e = 1; e <= max_exp; ++e) pow[x][static_cast<std::size_t>(e)] = f.mulv(pow[x][static_cast<std::size_t>(e - 1)], x);
    }

    std::vector<std::vector<std::uint32_t>> points;
    std::vector<std::uint32_t> pt(ideal.arity, 0);
    std::size_t total = static_cast<std::size_t>(size);
    for (std::size_t cell = 0; cell < total; ++cell) {
        bool zero = true;
        for (const auto& g : ideal.generators) {
            std::uint32_t acc = 0;
            for (const auto& [m, c] : g.terms()) {
                std::uint32_t t = c;
                for (std::size_t k = 0; k < ideal.arity; ++k)
                    if (m.e[k] != 0) t = f.mulv(t, pow[pt[k]][static_cast<std::size_t>(m.e[k])]);
                acc = f.addv(acc, t);
            }
            if (acc != 0) { zero = false; break; }
        }
        if (zero) points.push_back(pt);
        for (std::size_t k = ideal.arity; k-- > 0;) {
            if (++pt[k] < f.q()) break;
            pt[k] = 0;
        }
    }
    return points;
}

inline std::size_t count_variety_points(const IdealSpec& ideal) { return variety_points(ideal).size(); }

} // namespace cabcode

#endif
