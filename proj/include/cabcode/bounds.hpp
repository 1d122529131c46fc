#ifndef CABCODE_BOUNDS_HPP
#define CABCODE_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace cabcode {

/// Precomputed reduction data for one ideal: the Groebner basis (field
/// equations included), its footprint M_1 < ... < M_n, and the n-by-n table
///
///   R(i,j) = footprint index of lm(M_i * M_j rem G), or 0 if the product
///            reduces to zero.
///
/// Remainders of distinct index pairs with the same product monomial
/// coincide, so reductions are cached by product; footprint indices are
/// order-isomorphic to footprint monomials, which turns every leading-term
/// comparison downstream into an integer comparison ("reduces to zero"
/// compares below everything as index 0).
class BoundContext {
public:
    BoundContext(std::vector<MultiPoly> gb, const WeightedOrder& ord, std::size_t table_guard = 4096)
        : gb_(std::move(gb)), fp_(footprint(gb_, ord)) {
        if (gb_.empty()) throw ZeroPolynomial("empty Groebner basis");
        field_ = &gb_.front().field();
        if (fp_.n() == 0) throw EmptyCode("footprint is empty");
        const std::size_t n = static_cast<std::size_t>(fp_.n());
        if (n > table_guard) throw SizeExceeded("footprint size exceeds the reduction-table guard");
        rem_.assign(n * n, 0);
        std::map<Monomial, std::int32_t> cache;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Monomial prod = fp_.monomials[i] * fp_.monomials[j];
                auto [it, fresh] = cache.try_emplace(prod, 0);
                if (fresh) {
                    MultiPoly r = normal_form(MultiPoly::monomial(*field_, prod), gb_, fp_.ord);
                    it->second = r.is_zero() ? 0 : fp_.index_of(r.leading_monomial(fp_.ord));
                }
                rem_[i * n + j] = rem_[j * n + i] = it->second;
            }
        }
    }

    const Field& field() const { return *field_; }
    const std::vector<MultiPoly>& gb() const { return gb_; }
    const Footprint& fp() const { return fp_; }
    const WeightedOrder& ord() const { return fp_.ord; }
    int n() const { return fp_.n(); }

    /// 1-based on both sides.
    std::int32_t R(int i, int j) const {
        return rem_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(fp_.n()) +
                    static_cast<std::size_t>(j - 1)];
    }

    const std::int32_t* table() const { return rem_.data(); }

    void check_index(int i) const {
        if (i < 1 || i > fp_.n()) throw NotInFootprint("index " + std::to_string(i) + " outside 1..n");
    }

private:
    std::vector<MultiPoly> gb_;
    Footprint fp_;
    const Field* field_ = nullptr;
    std::vector<std::int32_t> rem_;
};

/// Read-only n-by-n view used by the shared case-set computation; row i,
/// column j (1-based) holds either a footprint/order index or 0 for a
/// vanishing product.
struct TableView {
    const std::int32_t* data = nullptr;
    int n = 0;
    std::int32_t at(int i, int j) const {
        return data[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j - 1)];
    }
};

inline TableView table_view(const BoundContext& ctx) { return TableView{ctx.table(), ctx.n()}; }

/// One well-behaving case at pivot index i: for t <= v the pair of pivots
/// (i, i-t) quantified over {1..i-t} minus exclusions plus i itself, for the
/// final case (partner = 0) the single pivot i quantified over {1..i-v-1}
/// minus exclusions. `members` lists the distinct indices produced, each
/// with the witness (j, pivot) that produced it first.
struct BoundCase {
    int t = 0;
    int partner = 0;
    std::vector<int> members;
    std::vector<std::pair<int, int>> witnesses;

    int cardinality() const { return static_cast<int>(members.size()); }
};

namespace detail {

inline std::vector<char> exclusion_mask(int i, const std::vector<int>& excl) {
    std::vector<char> mask(static_cast<std::size_t>(i), 0);
    for (int x : excl) {
        if (x < 1 || x >= i)
            throw ExclusionOutOfRange("exclusion index " + std::to_string(x) + " outside 1.." +
                                      std::to_string(i - 1));
        mask[static_cast<std::size_t>(x)] = 1;
    }
    return mask;
}

/// Shared core of the affine and linear-code bounds. Sets are produced for
/// every retained case t (those with i - t not excluded) in ascending t,
/// final case last.
inline std::vector<BoundCase> bound_case_sets(TableView T, int i, int v, const std::vector<int>& excl,
                                              bool want_witnesses = false) {
    if (i < 1 || i > T.n) throw NotInFootprint("pivot index outside 1..n");
    if (v < 0 || v >= i) throw BadV("need 0 <= v < i");
    std::vector<char> excluded = exclusion_mask(i, excl);

    std::vector<BoundCase> cases;
    for (int t = 1; t <= v; ++t)
        if (!excluded[static_cast<std::size_t>(i - t)]) cases.push_back(BoundCase{t, i - t, {}, {}});
    cases.push_back(BoundCase{v + 1, 0, {}, {}});

    const std::size_t ncases = cases.size();
    std::vector<std::vector<std::int32_t>> flags(ncases, std::vector<std::int32_t>(static_cast<std::size_t>(T.n) + 1, 0));
    std::vector<std::vector<std::pair<int, int>>> wit(
        want_witnesses ? ncases : 0,
        std::vector<std::pair<int, int>>(static_cast<std::size_t>(T.n) + 1, {0, 0}));

    std::vector<std::int32_t> pm(static_cast<std::size_t>(i), 0);
    for (int j = 1; j <= T.n; ++j) {
        for (int s = 1; s < i; ++s) {
            std::int32_t val = excluded[static_cast<std::size_t>(s)] ? 0 : T.at(s, j);
            pm[static_cast<std::size_t>(s)] = std::max(pm[static_cast<std::size_t>(s - 1)], val);
        }
        const std::int32_t ri = T.at(i, j);
        auto mark = [&](std::size_t c, std::int32_t k, int pivot) {
            if (flags[c][static_cast<std::size_t>(k)]) return;
            flags[c][static_cast<std::size_t>(k)] = 1;
            if (want_witnesses) wit[c][static_cast<std::size_t>(k)] = {j, pivot};
        };
        for (std::size_t c = 0; c + 1 < ncases; ++c) {
            const int p = cases[c].partner;
            if (ri > pm[static_cast<std::size_t>(p)]) mark(c, ri, i);
            const std::int32_t rp = T.at(p, j);
            if (rp > pm[static_cast<std::size_t>(p - 1)] && rp > ri) mark(c, rp, p);
        }
        if (ri > pm[static_cast<std::size_t>(i - v - 1)]) mark(ncases - 1, ri, i);
    }

    for (std::size_t c = 0; c < ncases; ++c) {
        for (int k = 1; k <= T.n; ++k) {
            if (!flags[c][static_cast<std::size_t>(k)]) continue;
            cases[c].members.push_back(k);
            if (want_witnesses) cases[c].witnesses.push_back(wit[c][static_cast<std::size_t>(k)]);
        }
    }
    return cases;
}

} // namespace detail

/// (M_i, M_j) is one-way well-behaving when every H supported on the
/// footprint with lm(H) = M_i keeps lm(H M_j rem G) = lm(M_i M_j rem G).
/// Normal forms are linear in H, so this reduces to a per-monomial test:
/// strict dominance of R(i,j) over R(s,j) for every smaller footprint index
/// s. Pairs whose product reduces to zero admit no witness and are reported
/// as not well-behaving.
inline bool is_owb(const BoundContext& ctx, int i, int j) {
    ctx.check_index(i);
    ctx.check_index(j);
    const std::int32_t ri = ctx.R(i, j);
    if (ri == 0) return false;
    for (int s = 1; s < i; ++s)
        if (ctx.R(s, j) >= ri) return false;
    return true;
}

/// Strong variant quantified over an arbitrary support set containing i.
inline bool is_sowb(const BoundContext& ctx, int i, int j, const std::vector<int>& support) {
    ctx.check_index(i);
    ctx.check_index(j);
    bool found = false;
    bool dominated = false;
    const std::int32_t ri = ctx.R(i, j);
    for (int s : support) {
        ctx.check_index(s);
        if (s == i) { found = true; continue; }
        if (ctx.R(s, j) >= ri) dominated = true;
    }
    if (!found) throw IndexNotInSupport("pivot index " + std::to_string(i) + " not in support set");
    return ri != 0 && !dominated;
}

/// Largest v with w(M_i) = w(M_{i-1}) = ... = w(M_{i-v}); the bound below is
/// valid for any such run of equal weights because the corresponding
/// codeword coefficients can be rotated into the pivot position.
inline int natural_v(const BoundContext& ctx, int i) {
    ctx.check_index(i);
    const std::int64_t w = ctx.fp().weight(i);
    int v = 0;
    while (i - v - 1 >= 1 && ctx.fp().weight(i - v - 1) == w) ++v;
    return v;
}

struct NewBoundResult {
    int i = 0;
    int v = 0;
    std::vector<BoundCase> cases;
    int bound = 0;
};

/// Improved bound at pivot index i: the minimum cardinality over the case
/// sets. Exclusions name indices below i whose codeword coefficients are
/// known a priori to vanish; excluded partners are skipped and excluded
/// indices leave every quantifier set. v = 0 with no exclusions is the
/// classical order-bound count.
inline NewBoundResult new_bound(const BoundContext& ctx, int i, int v,
                                const std::vector<int>& excl = {}, bool want_witnesses = false) {
    ctx.check_index(i);
    NewBoundResult res;
    res.i = i;
    res.v = v;
    res.cases = detail::bound_case_sets(table_view(ctx), i, v, excl, want_witnesses);
    res.bound = res.cases.front().cardinality();
    for (const auto& c : res.cases) res.bound = std::min(res.bound, c.cardinality());
    return res;
}

inline int feng_rao_bound(const BoundContext& ctx, int i) { return new_bound(ctx, i, 0).bound; }

/// Per-index v selection. natural uses the equal-weight run; fixed clamps to
/// the largest admissible value at small indices (new_bound itself rejects
/// v >= i instead of clamping).
using VPolicy = std::function<int(int)>;

inline VPolicy natural_v_policy(const BoundContext& ctx) {
    return [&ctx](int i) { return natural_v(ctx, i); };
}

inline VPolicy fixed_v_policy(int v) {
    return [v](int i) { return std::min(v, i - 1); };
}

using ExclusionPolicy = std::function<std::vector<int>(int)>;

inline ExclusionPolicy no_exclusions() {
    return [](int) { return std::vector<int>{}; };
}

struct BoundReportRow {
    int i = 0;
    Monomial monomial;
    std::int64_t weight = 0;
    int v = 0;
    std::vector<int> case_ts;
    std::vector<int> cardinalities;
    int sigma = 0;
};

struct BoundReport {
    std::vector<BoundReportRow> rows;
    int bound = 0;
};

/// Minimum of the per-index bounds over a set of footprint indices (the
/// code's monomial support). With the natural v policy and no exclusions the
/// minimum over {1..k} is the designed distance of the k-dimensional
/// evaluation code.
inline BoundReport min_distance_bound(const BoundContext& ctx, const std::vector<int>& box,
                                      const VPolicy& vp, const ExclusionPolicy& ep = no_exclusions()) {
    if (box.empty()) throw EmptyCode("no indices given");
    BoundReport rep;
    rep.bound = ctx.n() + 1;
    for (int i : box) {
        NewBoundResult r = new_bound(ctx, i, vp(i), ep(i));
        BoundReportRow row;
        row.i = i;
        row.monomial = ctx.fp().at(i);
        row.weight = ctx.fp().weight(i);
        row.v = r.v;
        for (const auto& c : r.cases) {
            row.case_ts.push_back(c.t);
            row.cardinalities.push_back(c.cardinality());
        }
        row.sigma = r.bound;
        rep.rows.push_back(std::move(row));
        rep.bound = std::min(rep.bound, r.bound);
    }
    return rep;
}

/// sigma-tilde for every footprint index (bound of the one-index code
/// support at i together with everything needed for improved codes).
inline std::vector<int> sigma_table(const BoundContext& ctx, const VPolicy& vp) {
    std::vector<int> sigma(static_cast<std::size_t>(ctx.n()) + 1, 0);
    for (int i = 1; i <= ctx.n(); ++i) sigma[static_cast<std::size_t>(i)] = new_bound(ctx, i, vp(i)).bound;
    return sigma;
}

// --- closed form for optimal instances --------------------------------------

/// Cardinality helpers for the rectangle decomposition behind the closed
/// form at M_i = X^alpha1 Y^alpha2 inside the a-by-q box: B1 is the shifted
/// box anchored at (alpha1, alpha2); B2 raises the second coordinate by b
/// and widens by T = alpha1 mod w(Y); B3(u) trades u weight steps.
inline std::int64_t bset1_card(std::int64_t a, std::int64_t q, std::int64_t a1, std::int64_t a2) {
    return (a - a1) * (q - a2);
}

inline std::int64_t bset2_card(std::int64_t a, std::int64_t b, std::int64_t q, std::int64_t a1,
                               std::int64_t a2) {
    std::int64_t wy = a / std::gcd(a, b);
    std::int64_t T = a1 % wy;
    if (T == 0 || a2 >= q - b) return 0;
    return T * (q - a2 - b);
}

inline std::int64_t bset3_card(std::int64_t a, std::int64_t b, std::int64_t q, std::int64_t a1,
                               std::int64_t a2, std::int64_t u) {
    std::int64_t g = std::gcd(a, b);
    std::int64_t wx = b / g, wy = a / g;
    if (a2 >= q - b || a1 <= a - wy || a1 >= a) return 0;
    std::int64_t width = wy * u - a + a1;
    std::int64_t height = q - a2 - wx * u;
    if (width <= 0 || height <= 0) return 0;
    return width * height;
}

/// Closed-form value of the improved bound at X^alpha1 Y^alpha2 for an
/// optimal instance with parameters (a, b, q), a < b: (a-alpha1)(q-alpha2)
/// plus a correction term that depends on which rectangle family applies.
/// The threshold separating the two interior regimes is compared by integer
/// cross-multiplication, so the gcd(a,b) = 1 case (where the denominator
/// a - w(Y) vanishes) needs no special handling.
inline std::int64_t closed_form_bound(std::int64_t a, std::int64_t b, std::int64_t q, std::int64_t a1,
                                      std::int64_t a2) {
    if (a >= b) throw BadRange("closed form needs a < b");
    if (a1 < 0 || a1 >= a || a2 < 0 || a2 >= q) throw BadRange("exponent outside the a-by-q box");
    std::int64_t g = std::gcd(a, b);
    std::int64_t wx = b / g, wy = a / g;
    std::int64_t T = a1 % wy;
    std::int64_t base = (a - a1) * (q - a2);
    std::int64_t eps = 0;
    if (a2 >= q - b) {
        eps = 0;
    } else if (a1 <= a - wy) {
        eps = T * (q - a2 - b);
    } else if ((q - wx - a2) * (a - wy) >= a1 * (b - wx)) {
        eps = T * (q - a2 - wx);
    } else {
        eps = a1 * (q - a2 - b);
    }
    return base + eps;
}

/// Same value assembled from the rectangle cardinalities; the minimum over
/// the trade parameter u is attained at an endpoint because the area is
/// concave in u. Used to audit closed_form_bound.
inline std::int64_t closed_form_via_bsets(std::int64_t a, std::int64_t b, std::int64_t q,
                                          std::int64_t a1, std::int64_t a2) {
    if (a >= b) throw BadRange("closed form needs a < b");
    if (a1 < 0 || a1 >= a || a2 < 0 || a2 >= q) throw BadRange("exponent outside the a-by-q box");
    std::int64_t g = std::gcd(a, b);
    std::int64_t wy = a / g;
    std::int64_t base = bset1_card(a, q, a1, a2);
    if (a2 >= q - b) return base;
    if (a1 <= a - wy) return base + bset2_card(a, b, q, a1, a2);
    std::int64_t eps = bset3_card(a, b, q, a1, a2, 1);
    for (std::int64_t u = 2; u <= g; ++u) eps = std::min(eps, bset3_card(a, b, q, a1, a2, u));
    return base + eps;
}

// --- pairs of indices (second generalized weight) ---------------------------

struct Ghw2Result {
    int bound = 0;
    std::vector<std::vector<int>> grid; // grid[z1-1][z2-1] = |L(z1, z2)|
};

/// Lower bound for the support of a 2-dimensional subspace whose
/// well-behaving basis tops out at footprint indices i1 and i2: minimum over
/// the (v1+1)-by-(v2+1) grid of unions of per-pivot case sets.
inline Ghw2Result ghw2_bound(const BoundContext& ctx, int i1, int i2, int v1, int v2) {
    if (i1 == i2) throw EqualIndices("pivot indices must differ");
    ctx.check_index(i1);
    ctx.check_index(i2);
    auto cases1 = detail::bound_case_sets(table_view(ctx), i1, v1, {});
    auto cases2 = detail::bound_case_sets(table_view(ctx), i2, v2, {});
    Ghw2Result res;
    res.bound = 2 * ctx.n();
    res.grid.assign(cases1.size(), std::vector<int>(cases2.size(), 0));
    std::vector<char> in_union(static_cast<std::size_t>(ctx.n()) + 1, 0);
    for (std::size_t z1 = 0; z1 < cases1.size(); ++z1) {
        for (std::size_t z2 = 0; z2 < cases2.size(); ++z2) {
            int card = 0;
            for (int k : cases1[z1].members)
                if (!in_union[static_cast<std::size_t>(k)]) { in_union[static_cast<std::size_t>(k)] = 1; ++card; }
            for (int k : cases2[z2].members)
                if (!in_union[static_cast<std::size_t>(k)]) { in_union[static_cast<std::size_t>(k)] = 1; ++card; }
            for (int k : cases1[z1].members) in_union[static_cast<std::size_t>(k)] = 0;
            for (int k : cases2[z2].members) in_union[static_cast<std::size_t>(k)] = 0;
            res.grid[z1][z2] = card;
            res.bound = std::min(res.bound, card);
        }
    }
    return res;
}

/// Code-level second weight: minimum over all index pairs from the support.
inline int ghw2_code_bound(const BoundContext& ctx, const std::vector<int>& box, const VPolicy& vp) {
    if (box.size() < 2) throw EmptyCode("need at least two indices");
    int best = 2 * ctx.n();
    for (std::size_t x = 0; x < box.size(); ++x)
        for (std::size_t y = x + 1; y < box.size(); ++y)
            best = std::min(best, ghw2_bound(ctx, box[x], box[y], vp(box[x]), vp(box[y])).bound);
    return best;
}

// --- export ------------------------------------------------------------------

inline std::string bound_report_csv(const BoundReport& rep) {
    std::ostringstream os;
    os << "i,monomial,weight,v,cards,sigma\n";
    for (const auto& r : rep.rows) {
        os << r.i << "," << r.monomial.str() << "," << r.weight << "," << r.v << ",";
        for (std::size_t c = 0; c < r.cardinalities.size(); ++c) {
            if (c) os << ";";
            os << r.cardinalities[c];
        }
        os << "," << r.sigma << "\n";
    }
    return os.str();
}

inline std::string bound_report_json(const BoundReport& rep) {
    std::ostringstream os;
    os << "{\n  \"bound\": " << rep.bound << ",\n  \"rows\": [\n";
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        const auto& r = rep.rows[k];
        os << "    {\"i\": " << r.i << ", \"monomial\": \"" << r.monomial.str() << "\", \"weight\": "
           << r.weight << ", \"v\": " << r.v << ", \"cards\": [";
        for (std::size_t c = 0; c < r.cardinalities.size(); ++c) {
            if (c) os << ", ";
            os << r.cardinalities[c];
        }
        os << "], \"sigma\": " << r.sigma << "}";
        os << (k + 1 < rep.rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

inline std::string footprint_json(const Footprint& fp) {
    std::ostringstream os;
    os << "[\n";
    for (int i = 1; i <= fp.n(); ++i) {
        os << "  {\"index\": " << i << ", \"monomial\": \"" << fp.at(i).str() << "\", \"weight\": "
           << fp.weight(i) << "}" << (i < fp.n() ? ",\n" : "\n");
    }
    os << "]\n";
    return os.str();
}

} // namespace cabcode

#endif
