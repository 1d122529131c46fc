#ifndef CABCODE_CODES_HPP
#define CABCODE_CODES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "linalg.hpp"

namespace cabcode {

inline std::vector<std::vector<std::uint32_t>> evaluation_points(const IdealSpec& ideal) {
    return variety_points(ideal);
}

/// Bound machinery plus the evaluation side of one variety: the point list
/// P_1..P_n (lexicographic coordinate order) and the full n-by-n evaluation
/// matrix whose row i is ev(M_i). The row space of that matrix is all of
/// F_q^n; invertibility is checked once at construction for moderate n.
struct CodeContext {
    BoundContext bctx;
    std::vector<std::vector<std::uint32_t>> points;
    Matrix ev;

    CodeContext(BoundContext b, std::vector<std::vector<std::uint32_t>> pts)
        : bctx(std::move(b)), points(std::move(pts)), ev(build_ev(bctx, points)) {
        if (points.size() != static_cast<std::size_t>(bctx.n()))
            throw Error("variety size differs from footprint size");
        if (bctx.n() <= 600 && ev.rank() != static_cast<std::size_t>(bctx.n()))
            throw SingularBasis("evaluation matrix of the footprint basis is singular");
    }

    int n() const { return bctx.n(); }
    const Field& field() const { return bctx.field(); }

private:
    static Matrix build_ev(const BoundContext& b, const std::vector<std::vector<std::uint32_t>>& pts) {
        const Field& f = b.field();
        const std::size_t n = pts.size();
        // Coordinate powers per point, then table fill.
        std::size_t arity = pts.empty() ? 0 : pts.front().size();
        std::vector<std::int32_t> maxe(arity, 0);
        for (int i = 1; i <= b.n(); ++i)
            for (std::size_t k = 0; k < arity; ++k)
                maxe[k] = std::max(maxe[k], b.fp().at(i).e[k]);
        Matrix m(f, static_cast<std::size_t>(b.n()), n);
        std::vector<std::vector<std::uint32_t>> pw(arity);
        for (std::size_t t = 0; t < n; ++t) {
            for (std::size_t k = 0; k < arity; ++k) {
                pw[k].assign(static_cast<std::size_t>(maxe[k]) + 1, 1);
                for (std::int32_t e = 1; e <= maxe[k]; ++e)
                    pw[k][static_cast<std::size_t>(e)] = f.mulv(pw[k][static_cast<std::size_t>(e - 1)], pts[t][k]);
            }
            for (int i = 1; i <= b.n(); ++i) {
                const Monomial& mon = b.fp().at(i);
                std::uint32_t val = 1;
                for (std::size_t k = 0; k < arity; ++k)
                    if (mon.e[k]) val = f.mulv(val, pw[k][static_cast<std::size_t>(mon.e[k])]);
                m.at(static_cast<std::size_t>(i - 1), t) = val;
            }
        }
        return m;
    }
};

inline CodeContext make_code_context(const IdealSpec& ideal, const WeightedOrder& ord) {
    BoundContext bctx(buchberger(ideal, ord), ord);
    return CodeContext(std::move(bctx), variety_points(ideal));
}

inline CodeContext make_code_context(const CabSpec& spec) {
    const Field& f = spec.F.field();
    BoundContext bctx(spec.groebner_basis_with_field_equations(), spec.order);
    IdealSpec ideal(f, 2, {spec.F}, true);
    return CodeContext(std::move(bctx), variety_points(ideal));
}

/// An evaluation code: generator matrix plus, when the code is spanned by
/// footprint monomials, their 1-based indices.
struct CodeSpec {
    std::vector<int> indices; // empty for non-monomial-spanned codes
    Matrix gen;
    int n = 0;
    int k = 0;
    std::optional<int> designed_distance;
};

inline CodeSpec code_from_indices(const CodeContext& cc, const std::vector<int>& support) {
    if (support.empty()) throw EmptyCode("empty monomial support");
    std::vector<int> s = support;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    Matrix g(cc.field(), s.size(), static_cast<std::size_t>(cc.n()));
    for (std::size_t r = 0; r < s.size(); ++r) {
        cc.bctx.check_index(s[r]);
        for (std::size_t c = 0; c < static_cast<std::size_t>(cc.n()); ++c)
            g.at(r, c) = cc.ev.at(static_cast<std::size_t>(s[r] - 1), c);
    }
    if (g.rank() != s.size()) throw RankDeficient("evaluation rows are dependent");
    CodeSpec code{std::move(s), std::move(g), cc.n(), 0, std::nullopt};
    code.k = static_cast<int>(code.indices.size());
    return code;
}

inline CodeSpec dual_code(const CodeSpec& code) {
    Matrix ker = code.gen.kernel();
    CodeSpec dual{{}, ker, code.n, static_cast<int>(ker.rows()), std::nullopt};
    return dual;
}

/// Indices of the trailing monomials of a well-behaving basis of the span of
/// the given coefficient rows (coefficients over the footprint basis, column
/// i-1 = coefficient of M_i).
inline std::vector<int> box_of_subspace(const BoundContext& ctx, const Matrix& coeff_rows) {
    if (coeff_rows.cols() != static_cast<std::size_t>(ctx.n())) throw BadRange("coefficient row length differs from n");
    Matrix copy = coeff_rows;
    std::vector<std::size_t> pivots = copy.rref(true);
    if (pivots.size() != coeff_rows.rows()) throw DependentInput("rows are linearly dependent");
    std::vector<int> box;
    box.reserve(pivots.size());
    for (std::size_t c : pivots) box.push_back(static_cast<int>(c) + 1);
    std::sort(box.begin(), box.end());
    return box;
}

struct ImprovedCode {
    std::vector<int> support;
    std::map<int, std::vector<int>> exclusions; // per pivot, indices assumed zero
    int designed = 0;                           // requested delta
    int achieved = 0;                           // min per-pivot bound, >= designed
};

/// Monomial support {i : sigma-tilde(i) >= delta}.
inline ImprovedCode improved_code(const BoundContext& ctx, int delta, const VPolicy& vp) {
    std::vector<int> sigma = sigma_table(ctx, vp);
    ImprovedCode imp;
    imp.designed = delta;
    imp.achieved = ctx.n() + 1;
    for (int i = 1; i <= ctx.n(); ++i) {
        if (sigma[static_cast<std::size_t>(i)] < delta) continue;
        imp.support.push_back(i);
        imp.achieved = std::min(imp.achieved, sigma[static_cast<std::size_t>(i)]);
    }
    if (imp.support.empty()) throw EmptyCode("no index reaches the requested bound");
    return imp;
}

/// Ascending greedy refinement: index i joins the support when its bound,
/// with every earlier non-member excluded (their coefficients are zero for
/// any word of the final span), still reaches delta. Later admissions never
/// touch the exclusion sets of earlier pivots, so each admission decision is
/// final and the result contains the plain improved support.
inline ImprovedCode improved_code_with_exclusions(const BoundContext& ctx, int delta, const VPolicy& vp) {
    ImprovedCode imp;
    imp.designed = delta;
    imp.achieved = ctx.n() + 1;
    std::vector<char> member(static_cast<std::size_t>(ctx.n()) + 1, 0);
    for (int i = 1; i <= ctx.n(); ++i) {
        std::vector<int> excl;
        for (int x = 1; x < i; ++x)
            if (!member[static_cast<std::size_t>(x)]) excl.push_back(x);
        int b = new_bound(ctx, i, vp(i), excl).bound;
        if (b < delta) continue;
        member[static_cast<std::size_t>(i)] = 1;
        imp.support.push_back(i);
        imp.exclusions[i] = std::move(excl);
        imp.achieved = std::min(imp.achieved, b);
    }
    if (imp.support.empty()) throw EmptyCode("no index reaches the requested bound");
    return imp;
}

// --- generic linear-code level ----------------------------------------------

/// Three invertible n-by-n matrices; row i of U is the basis vector u_i.
struct BasisTriple {
    Matrix u, v, w;

    BasisTriple(Matrix uu, Matrix vv, Matrix ww) : u(std::move(uu)), v(std::move(vv)), w(std::move(ww)) {
        check(u, "U");
        check(v, "V");
        check(w, "W");
        if (u.rows() != v.rows() || v.rows() != w.rows()) throw BadRange("basis sizes differ");
    }

    static BasisTriple evaluation(const CodeContext& cc) { return BasisTriple(cc.ev, cc.ev, cc.ev); }

private:
    static void check(const Matrix& m, const char* name) {
        if (m.rows() != m.cols()) throw SingularBasis(std::string(name) + " is not square");
        if (m.rank() != m.rows()) throw SingularBasis(std::string(name) + " is singular");
    }
};

/// Position of the last nonzero coordinate of c in the given basis
/// (1-based), 0 for the zero vector.
inline int rho_bar(const Matrix& basis, const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> x = basis.inverse().apply_row(c); // c * inv
    for (std::size_t k = x.size(); k-- > 0;)
        if (x[k] != 0) return static_cast<int>(k) + 1;
    return 0;
}

/// rho-bar table of a basis triple: T(i,j) = rho_bar_W(u_i * v_j), with 0
/// for vanishing products. For the evaluation triple this coincides with the
/// reduction table R of the bound context.
struct RhoTable {
    std::vector<std::int32_t> t;
    int n = 0;
    TableView view() const { return TableView{t.data(), n}; }
};

inline RhoTable build_rho_table(const BasisTriple& triple) {
    const Field& f = triple.u.field();
    const std::size_t n = triple.u.rows();
    Matrix winv = triple.w.inverse();
    RhoTable table;
    table.n = static_cast<int>(n);
    table.t.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> ui = triple.u.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::uint32_t> prod = pointwise(f, ui, triple.v.row(j));
            std::vector<std::uint32_t> x = winv.apply_row(prod);
            std::int32_t r = 0;
            for (std::size_t k = n; k-- > 0;)
                if (x[k] != 0) { r = static_cast<std::int32_t>(k) + 1; break; }
            table.t[i * n + j] = r;
        }
    }
    return table;
}

/// Set rho_bar_U(C) for the row space of gen: pivot positions of the reverse
/// echelon form of the U-coordinate matrix (1-based, ascending).
inline std::vector<int> rho_set(const Matrix& basis, const Matrix& gen) {
    Matrix coords = gen * basis.inverse();
    std::vector<std::size_t> pivots = coords.rref(true);
    std::vector<int> out;
    out.reserve(pivots.size());
    for (std::size_t c : pivots) out.push_back(static_cast<int>(c) + 1);
    std::sort(out.begin(), out.end());
    return out;
}

/// Set m(C) = {smallest l with c . w_l != 0}: pivot positions of the forward
/// echelon form of gen * W^T (1-based, ascending).
inline std::vector<int> m_set(const Matrix& w, const Matrix& gen) {
    Matrix y = gen * w.transposed();
    std::vector<std::size_t> pivots = y.rref(false);
    std::vector<int> out;
    out.reserve(pivots.size());
    for (std::size_t c : pivots) out.push_back(static_cast<int>(c) + 1);
    std::sort(out.begin(), out.end());
    return out;
}

struct LinearBoundRow {
    int i = 0;
    int v = 0;
    std::vector<int> cardinalities;
    int value = 0;
};

struct LinearBoundResult {
    int bound = 0;
    std::vector<LinearBoundRow> rows;
};

/// Feng-Rao-style primary bound for an arbitrary linear code under a basis
/// triple: minimum over i in rho_bar_U(C) of the case-set minimum, with
/// optional per-pivot exclusion sets I-hat (indices whose U-coordinates are
/// a priori zero on every word with rho-bar = i; validity is the caller's
/// responsibility).
inline LinearBoundResult linear_primary_bound(const BasisTriple& triple, const Matrix& gen,
                                              const VPolicy& vp,
                                              const ExclusionPolicy& ep = no_exclusions()) {
    RhoTable table = build_rho_table(triple);
    LinearBoundResult res;
    res.bound = table.n + 1;
    for (int i : rho_set(triple.u, gen)) {
        auto cases = detail::bound_case_sets(table.view(), i, vp(i), ep(i));
        LinearBoundRow row;
        row.i = i;
        row.v = vp(i);
        row.value = cases.front().cardinality();
        for (const auto& c : cases) {
            row.cardinalities.push_back(c.cardinality());
            row.value = std::min(row.value, c.cardinality());
        }
        res.bound = std::min(res.bound, row.value);
        res.rows.push_back(std::move(row));
    }
    if (res.rows.empty()) throw EmptyCode("zero code has no bound");
    return res;
}

// --- dual side ----------------------------------------------------------------

namespace detail {

/// Greedy maximal index set with the mu-property at position l (relax = 0),
/// or its relaxed variant with secondary position relax (exception set
/// {l+1..exc_top} in both cases). Members are admitted in ascending order;
/// every condition only involves already-admitted members, so the greedy
/// pass yields a well-defined maximal set.
inline std::vector<int> greedy_mu_set(TableView T, int l, int exc_top, int relax) {
    const int n = T.n;
    std::vector<char> eq_l(static_cast<std::size_t>(n) + 1, 0);   // some member hits exactly l at j
    std::vector<char> above(static_cast<std::size_t>(n) + 1, 0);  // some member exceeds the exception at j
    std::vector<std::int32_t> maxval(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> members;
    for (int i = 1; i <= n; ++i) {
        int witness = 0;
        for (int j = 1; j <= n; ++j) {
            const std::int32_t val = T.at(i, j);
            if (val == l && !eq_l[static_cast<std::size_t>(j)] && !above[static_cast<std::size_t>(j)]) {
                witness = j;
                break;
            }
            if (relax != 0 && val == relax && maxval[static_cast<std::size_t>(j)] < relax &&
                !eq_l[static_cast<std::size_t>(j)]) {
                witness = j;
                break;
            }
        }
        if (witness == 0) continue;
        members.push_back(i);
        for (int j = 1; j <= n; ++j) {
            const std::int32_t val = T.at(i, j);
            if (val == l) eq_l[static_cast<std::size_t>(j)] = 1;
            if (val > exc_top) above[static_cast<std::size_t>(j)] = 1;
            if (val > maxval[static_cast<std::size_t>(j)]) maxval[static_cast<std::size_t>(j)] = val;
        }
    }
    return members;
}

} // namespace detail

struct MuSets {
    int l = 0;
    int v = 0;
    std::vector<int> relax_positions;     // retained l'_1 < ... < l'_s (0 stands for the plain set)
    std::vector<std::vector<int>> sets;   // sets[0] = I'_0, then one per relax position
    int value = 0;                        // min cardinality
};

/// The per-position value of the dual bound: I'_0 with exception {l+1..l+v}
/// plus one relaxed set per exception position not excused a priori.
inline MuSets mu_sets(TableView T, int l, int v, const std::vector<int>& apriori = {}) {
    if (l < 1 || l > T.n) throw NotInFootprint("position outside 1..n");
    if (v < 0 || l + v > T.n) throw BadV("need v >= 0 and l + v <= n");
    std::vector<char> skip(static_cast<std::size_t>(v) + 1, 0);
    for (int x : apriori) {
        if (x <= l || x > l + v) throw ExclusionOutOfRange("a-priori position outside l+1..l+v");
        skip[static_cast<std::size_t>(x - l)] = 1;
    }
    MuSets res;
    res.l = l;
    res.v = v;
    res.sets.push_back(detail::greedy_mu_set(T, l, l + v, 0));
    res.value = static_cast<int>(res.sets.front().size());
    for (int lp = l + 1; lp <= l + v; ++lp) {
        if (skip[static_cast<std::size_t>(lp - l)]) continue;
        res.relax_positions.push_back(lp);
        res.sets.push_back(detail::greedy_mu_set(T, l, lp - 1, lp));
        res.value = std::min(res.value, static_cast<int>(res.sets.back().size()));
    }
    return res;
}

struct MuBoundRow {
    int l = 0;
    int v = 0;
    std::vector<int> set_sizes;
    int value = 0;
};

struct MuBoundResult {
    int bound = 0;
    std::vector<MuBoundRow> rows;
};

using AprioriPolicy = std::function<std::vector<int>(int)>;

inline AprioriPolicy no_apriori() {
    return [](int) { return std::vector<int>{}; };
}

/// Dual-side bound: minimum over l in m(C) of the mu-set values.
inline MuBoundResult mu_dual_bound_table(TableView T, const std::vector<int>& mset, const VPolicy& vp,
                                         const AprioriPolicy& ap = no_apriori()) {
    if (mset.empty()) throw EmptyCode("zero code has no bound");
    MuBoundResult res;
    res.bound = T.n + 1;
    for (int l : mset) {
        MuSets ms = mu_sets(T, l, vp(l), ap(l));
        MuBoundRow row;
        row.l = l;
        row.v = ms.v;
        for (const auto& s : ms.sets) row.set_sizes.push_back(static_cast<int>(s.size()));
        row.value = ms.value;
        res.bound = std::min(res.bound, ms.value);
        res.rows.push_back(std::move(row));
    }
    return res;
}

inline MuBoundResult mu_dual_bound(const BasisTriple& triple, const Matrix& gen, const VPolicy& vp,
                                   const AprioriPolicy& ap = no_apriori()) {
    RhoTable table = build_rho_table(triple);
    return mu_dual_bound_table(table.view(), m_set(triple.w, gen), vp, ap);
}

/// Forward equal-weight run: v(l) = #{t > l : w(M_t) = w(M_l), t <= l + v
/// consecutive}; the mirror of the natural v of the primary side.
inline VPolicy dual_natural_v_policy(const BoundContext& ctx) {
    return [&ctx](int l) {
        const std::int64_t w = ctx.fp().weight(l);
        int v = 0;
        while (l + v + 1 <= ctx.n() && ctx.fp().weight(l + v + 1) == w) ++v;
        return v;
    };
}

/// Designed value sigma(l) for every position, independent of any concrete
/// code: words with m(c) = l have weight at least sigma(l).
inline std::vector<int> dual_sigma_table(TableView T, const VPolicy& vp) {
    std::vector<int> sigma(static_cast<std::size_t>(T.n) + 1, 0);
    for (int l = 1; l <= T.n; ++l) sigma[static_cast<std::size_t>(l)] = mu_sets(T, l, vp(l)).value;
    return sigma;
}

/// Dual improved code: all words orthogonal to ev(M_l) for every l whose
/// designed value falls below delta.
inline CodeSpec cfim_code(const CodeContext& cc, int delta, const VPolicy& vp) {
    std::vector<int> sigma = dual_sigma_table(table_view(cc.bctx), vp);
    std::vector<int> parity;
    for (int l = 1; l <= cc.n(); ++l)
        if (sigma[static_cast<std::size_t>(l)] < delta) parity.push_back(l);
    if (parity.empty()) {
        CodeSpec full{{}, Matrix::identity(cc.field(), static_cast<std::size_t>(cc.n())), cc.n(), cc.n(), delta};
        return full;
    }
    Matrix rows(cc.field(), parity.size(), static_cast<std::size_t>(cc.n()));
    for (std::size_t r = 0; r < parity.size(); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(cc.n()); ++c)
            rows.at(r, c) = cc.ev.at(static_cast<std::size_t>(parity[r] - 1), c);
    Matrix ker = rows.kernel();
    CodeSpec code{{}, ker, cc.n(), static_cast<int>(ker.rows()), delta};
    return code;
}

// --- designed-distance tables ----------------------------------------------

struct SeriesPoint {
    int delta = 0;
    int k = 0;
};

/// Dimension of the improved primary code for each delta in [1, delta_max].
inline std::vector<SeriesPoint> eimp_series(const BoundContext& ctx, const VPolicy& vp, int delta_max) {
    std::vector<int> sigma = sigma_table(ctx, vp);
    std::vector<SeriesPoint> out;
    for (int d = 1; d <= delta_max; ++d) {
        int k = 0;
        for (int i = 1; i <= ctx.n(); ++i)
            if (sigma[static_cast<std::size_t>(i)] >= d) ++k;
        out.push_back({d, k});
    }
    return out;
}

/// Dimension of the dual improved code for each delta in [1, delta_max].
inline std::vector<SeriesPoint> cfim_series(const BoundContext& ctx, const VPolicy& vp, int delta_max) {
    std::vector<int> sigma = dual_sigma_table(table_view(ctx), vp);
    std::vector<SeriesPoint> out;
    for (int d = 1; d <= delta_max; ++d) {
        int k = 0;
        for (int l = 1; l <= ctx.n(); ++l)
            if (sigma[static_cast<std::size_t>(l)] < d) ++k;
        out.push_back({d, ctx.n() - k});
    }
    return out;
}

/// Designed distance of the plain k-dimensional code E(k) for k = 1..n:
/// minimum sigma-tilde over {1..k}.
inline std::vector<SeriesPoint> ek_series(const BoundContext& ctx, const VPolicy& vp) {
    std::vector<int> sigma = sigma_table(ctx, vp);
    std::vector<SeriesPoint> out;
    int running = ctx.n() + 1;
    for (int k = 1; k <= ctx.n(); ++k) {
        running = std::min(running, sigma[static_cast<std::size_t>(k)]);
        out.push_back({running, k});
    }
    return out;
}

} // namespace cabcode

#endif
