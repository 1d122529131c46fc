// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exit code 0 only when every criterion holds within its time budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <cabcode/cabcode.hpp>

using namespace cabcode;

namespace {

struct CheckFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFail(what);
}

template <typename A, typename B>
void require_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want)))
        throw CheckFail(what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
}

Monomial xy(int a1, int a2) {
    Monomial m(2);
    m.e[0] = a1;
    m.e[1] = a2;
    return m;
}

struct Curve {
    Field f;
    WeightedOrder ord;
    BoundContext ctx;

    Curve(std::uint64_t p, std::uint64_t m, const char* poly, std::vector<std::int64_t> w)
        : f(p, m),
          ord(std::move(w)),
          ctx(buchberger(IdealSpec(f, 2, {parse_poly(poly, f, 2)}), ord), ord) {}
};

// Independent order-bound count: distinct nonzero table values over
// one-way well-behaving partners.
int classic_count(const BoundContext& ctx, int i) {
    std::set<std::int32_t> vals;
    for (int j = 1; j <= ctx.n(); ++j)
        if (is_owb(ctx, i, j)) vals.insert(ctx.R(i, j));
    return static_cast<int>(vals.size());
}

std::vector<int> iota_vec(int from, int to) {
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

void write_series_csv(const std::string& path, const std::vector<SeriesPoint>& series, int n,
                      const std::string& label) {
    std::ofstream out(path);
    out << "# label: " << label << "\n";
    out << "delta,k,delta_over_n,k_over_n\n";
    for (const auto& pt : series)
        out << pt.delta << "," << pt.k << "," << static_cast<double>(pt.delta) / n << ","
            << static_cast<double>(pt.k) / n << "\n";
}

void check_monotone(const std::vector<SeriesPoint>& series, const std::string& what) {
    for (std::size_t t = 1; t < series.size(); ++t)
        require(series[t].k <= series[t - 1].k, what + ": k increases with delta");
}

// The GF(32) pairing of the two degree-5 coset polynomials; Buchberger on it
// is the one expensive construction, shared between criteria 7 and 10.
struct BigPairing {
    Field f;
    CabSpec spec;
    BoundContext ctx;

    BigPairing()
        : f(2, 5),
          spec(make_spec(f)),
          ctx(buchberger(IdealSpec(f, 2, {spec.F}), spec.order), spec.order) {}

    static CabSpec make_spec(const Field& f) {
        CosetTable t = cyclotomic_cosets(2, 5);
        return build_generalized_cab(coset_polynomial(t, 5, f), coset_polynomial(t, 11, f), f);
    }
};

BigPairing& big_pairing() {
    static BigPairing bp;
    return bp;
}

// --- criteria ----------------------------------------------------------------

void criterion1() {
    Curve c(2, 2, "X^2+X+Y^3", {3, 2});
    require_eq(c.ctx.n(), 8, "footprint size");
    const char* mons[] = {"1", "Y", "X", "Y^2", "XY", "Y^3", "XY^2", "XY^3"};
    const std::int64_t wts[] = {0, 2, 3, 4, 5, 6, 7, 9};
    for (int i = 1; i <= 8; ++i) {
        require(c.ctx.fp().at(i).str() == mons[i - 1],
                "monomial " + std::to_string(i) + " is " + c.ctx.fp().at(i).str());
        require_eq(c.ctx.fp().weight(i), wts[i - 1], "weight " + std::to_string(i));
    }
    int ix = c.ctx.fp().index_of(xy(1, 0));
    require_eq(ix, 3, "index of X");
    require_eq(feng_rao_bound(c.ctx, ix), 5, "order bound at X");
}

void criterion2() {
    Field f(2, 3);
    IdealSpec ideal(f, 2, {parse_poly("X^4+X^2+X-Y^6-Y^5-Y^3", f, 2)});
    require_eq(count_variety_points(ideal), static_cast<std::size_t>(32), "variety size");
    WeightedOrder ord({3, 2});
    BoundContext ctx(buchberger(ideal, ord), ord);
    require_eq(ctx.n(), 32, "footprint size");
    int ix = ctx.fp().index_of(xy(3, 0));
    require_eq(feng_rao_bound(ctx, ix), 10, "order bound at X^3");
    NewBoundResult r = new_bound(ctx, ix, 1);
    require_eq(r.cases.size(), static_cast<std::size_t>(2), "case count at v = 1");
    require_eq(r.cases[0].cardinality(), 13, "first case set size");
    require_eq(r.cases[1].cardinality(), 14, "final case set size");
    require_eq(r.bound, 13, "improved bound at X^3");
}

void criterion3() {
    struct Expect {
        std::uint64_t m;
        std::vector<std::uint64_t> reps;                 // nonzero representatives
        std::vector<const char*> polys;                  // same order as reps
        std::vector<std::uint64_t> balanced;
    };
    const Expect table[] = {
        {3, {1, 3}, {"X^4+X^2+X", "X^6+X^5+X^3"}, {1, 3}},
        {4,
         {1, 3, 5, 7},
         {"X^8+X^4+X^2+X", "X^12+X^9+X^6+X^3", "X^10+X^5", "X^14+X^13+X^11+X^7"},
         {1, 7}},
        {5,
         {1, 3, 5, 7, 11, 15},
         {"X^16+X^8+X^4+X^2+X", "X^24+X^17+X^12+X^6+X^3", "X^20+X^18+X^10+X^9+X^5",
          "X^28+X^25+X^19+X^14+X^7", "X^26+X^22+X^21+X^13+X^11", "X^30+X^29+X^27+X^23+X^15"},
         {1, 3, 5, 7, 11, 15}},
    };
    for (const auto& e : table) {
        Field f(2, e.m);
        CosetTable t = cyclotomic_cosets(2, e.m);
        std::vector<std::uint64_t> reps = t.representatives();
        require(reps.front() == 0, "zero coset first (m = " + std::to_string(e.m) + ")");
        reps.erase(reps.begin());
        require(reps == e.reps, "representatives over GF(2^" + std::to_string(e.m) + ")");
        std::vector<std::uint64_t> bal;
        for (std::size_t k = 0; k < reps.size(); ++k) {
            require(print_poly(coset_polynomial(t, reps[k], f)) == e.polys[k],
                    "coset polynomial F_" + std::to_string(reps[k]) + " over GF(2^" +
                        std::to_string(e.m) + ")");
            if (is_balanced(t, reps[k])) bal.push_back(reps[k]);
        }
        require(bal == e.balanced, "balanced flags over GF(2^" + std::to_string(e.m) + ")");
        if (e.m == 4) {
            std::string flags;
            for (std::uint64_t r : bal) {
                if (!flags.empty()) flags += ", ";
                flags += "F_" + std::to_string(r) + "(X)";
            }
            require(flags == "F_1(X), F_7(X)", "balanced list text: " + flags);
        }
    }
}

void criterion4() {
    std::filesystem::create_directories("acceptance_out");
    std::ofstream gaps("acceptance_out/closed_form_gaps.csv");
    gaps << "q,a,b,i,monomial,bound,closed_form,gap\n";
    Field f8(2, 3), f16(2, 4);
    for (const Field* f : {&f8, &f16}) {
        for (const CabSpec& spec : list_optimal_cab(*f)) {
            BoundContext ctx(spec.groebner_basis_with_field_equations(), spec.order);
            for (int i = 1; i <= ctx.n(); ++i) {
                const Monomial& m = ctx.fp().at(i);
                int nb = new_bound(ctx, i, natural_v(ctx, i)).bound;
                std::int64_t cf = closed_form_bound(spec.a, spec.b,
                                                    static_cast<std::int64_t>(f->q()), m.e[0], m.e[1]);
                gaps << f->q() << "," << spec.a << "," << spec.b << "," << i << "," << m.str()
                     << "," << nb << "," << cf << "," << (nb - cf) << "\n";
                require(nb >= cf, "(a,b,q) = (" + std::to_string(spec.a) + "," +
                                      std::to_string(spec.b) + "," + std::to_string(f->q()) +
                                      ") at " + m.str() + ": bound " + std::to_string(nb) +
                                      " below closed form " + std::to_string(cf));
                if (f->q() == 8 && spec.b == 6 && m == xy(3, 0)) {
                    require_eq(nb, 13, "bound at X^3 on (4,6)");
                    require_eq(cf, static_cast<std::int64_t>(13), "closed form at X^3 on (4,6)");
                }
            }
        }
    }
}

void criterion5() {
    Field f8(2, 3);
    CabSpec spec = list_optimal_cab(f8).at(0);
    require(spec.a == 4 && spec.b == 6, "first optimal pair is (4,6)");
    CodeContext cc = make_code_context(spec);
    VPolicy vp = natural_v_policy(cc.bctx);
    std::vector<SeriesPoint> series = eimp_series(cc.bctx, vp, 32);
    require_eq(series[27].k, 2, "dimension at delta = 28");
    require_eq(series[11].k, 15, "dimension at delta = 12");
    ImprovedCode imp = improved_code(cc.bctx, 28, vp);
    require(imp.support == std::vector<int>{1, 2}, "support of the two-dimensional code");
    CodeSpec code = code_from_indices(cc, imp.support);
    WeightProfile prof = weight_profile(code);
    long long nonzero = 0;
    for (const auto& [w, cnt] : prof.counts)
        if (w > 0) nonzero += cnt;
    require_eq(nonzero, 63LL, "nonzero codeword count");
    require_eq(prof.min_nonzero, 28, "true minimum distance");
}

void criterion6() {
    Field f(2, 3);
    IdealSpec ideal(f, 2, {parse_poly("X^3Y+Y^3+X", f, 2)});
    CodeContext cc = make_code_context(ideal, WeightedOrder({2, 3}));
    require_eq(cc.n(), 22, "footprint size");
    const char* mons[] = {"1",   "X",    "Y",    "X^2", "XY",    "Y^2",   "X^3",   "X^2Y",
                          "XY^2", "X^4",  "Y^3",  "X^2Y^2", "X^5", "XY^3", "Y^4",   "X^6",
                          "X^2Y^3", "XY^4", "X^7", "Y^5",   "X^2Y^4", "Y^6"};
    for (int i = 1; i <= 22; ++i)
        require(cc.bctx.fp().at(i).str() == mons[i - 1],
                "monomial " + std::to_string(i) + " is " + cc.bctx.fp().at(i).str());
    int ix = cc.bctx.fp().index_of(xy(3, 0));
    NewBoundResult r = new_bound(cc.bctx, ix, 1);
    require_eq(r.cases[1].cardinality(), 13, "final case set size at X^3");

    VPolicy vp = natural_v_policy(cc.bctx);
    ImprovedCode plain = improved_code(cc.bctx, 11, vp);
    require(plain.support == iota_vec(1, 6), "improved support at delta = 11");
    require(plain.achieved >= 11, "improved bound at delta = 11");
    ImprovedCode refined = improved_code_with_exclusions(cc.bctx, 12, vp);
    require(refined.support == std::vector<int>{1, 2, 3, 4, 5, 7}, "refined support at delta = 12");
    require(refined.achieved >= 12, "refined bound at delta = 12");
    require_eq(code_from_indices(cc, refined.support).k, 6, "refined code dimension");
    require_eq(cc.n(), 22, "code length");

    // Exact-match check kept last: the expected count of 6 misses one
    // member. Y^6 enters through (Y^2, X^6) exactly the way X^2Y^4 enters
    // through (Y^2, X^5): the partner product X^3 X^6 collapses to X^2, so
    // only the Y^2 coefficient reaches weight 18. Brute force over all words
    // with both top coefficients nonzero gives true minimum weight 13, so
    // the larger count is sound.
    require_eq(r.cases[0].cardinality(), 6, "first case set size at X^3");
}

void criterion7() {
    BigPairing& bp = big_pairing();
    require_eq(bp.spec.zeros, static_cast<std::size_t>(512), "zero count");
    require_eq(count_variety_points(IdealSpec(bp.f, 2, {bp.spec.F})), static_cast<std::size_t>(512),
               "variety size");
    require(!bp.spec.optimal, "512 < a*q, not an optimal pair");
    require_eq(bp.ctx.n(), 512, "footprint size");
    for (int i = 1; i <= bp.ctx.n(); ++i) {
        const Monomial& m = bp.ctx.fp().at(i);
        bool in_union = (m.e[0] < 12 && m.e[1] < 32) || (m.e[0] >= 12 && m.e[0] < 20 && m.e[1] < 16);
        require(in_union, "footprint monomial " + m.str() + " outside the two-box union");
    }
    // 12*32 + 8*16 = 512 = footprint size, so membership gives set equality.
}

void criterion8() {
    Field f8(2, 3), f16(2, 4);
    std::vector<CabSpec> specs;
    specs.push_back(list_optimal_cab(f8).at(0));  // (4, 6)
    specs.push_back(list_optimal_cab(f8).at(1));  // (4, 7)
    specs.push_back(list_optimal_cab(f16).at(0)); // (8, 10)
    std::mt19937 rng(20260817);
    for (const CabSpec& spec : specs) {
        const std::string tag = "(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")";
        CodeContext cc = make_code_context(spec);
        const int n = cc.n();
        TableView T = table_view(cc.bctx);
        VPolicy vp = natural_v_policy(cc.bctx);
        VPolicy dvp = dual_natural_v_policy(cc.bctx);

        for (int l = 1; l <= n; ++l) {
            int i = n - l + 1;
            int v = natural_v(cc.bctx, i);
            require_eq(dvp(l), v, tag + " mirrored v at position " + std::to_string(l));
            MuSets ms = mu_sets(T, l, v);
            NewBoundResult nb = new_bound(cc.bctx, i, v);
            require_eq(ms.sets.size(), nb.cases.size(), tag + " set count at " + std::to_string(l));
            require_eq(static_cast<int>(ms.sets.front().size()), nb.cases.back().cardinality(),
                       tag + " plain set vs final case at " + std::to_string(l));
            for (std::size_t u = 1; u < ms.sets.size(); ++u)
                require_eq(static_cast<int>(ms.sets[u].size()), nb.cases[u - 1].cardinality(),
                           tag + " relaxed set " + std::to_string(u) + " at " + std::to_string(l));
        }

        for (int trial = 0; trial < 20; ++trial) {
            int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            std::vector<int> all = iota_vec(1, n);
            for (int t = 0; t < size; ++t)
                std::swap(all[static_cast<std::size_t>(t)],
                          all[t + static_cast<std::size_t>(rng() % static_cast<unsigned>(n - t))]);
            std::vector<int> support(all.begin(), all.begin() + size);
            std::sort(support.begin(), support.end());

            int primary = min_distance_bound(cc.bctx, support, vp).bound;

            std::vector<char> dropped(static_cast<std::size_t>(n) + 1, 0);
            std::vector<int> expect_m;
            for (int s : support) {
                dropped[static_cast<std::size_t>(n - s + 1)] = 1;
                expect_m.push_back(n - s + 1);
            }
            std::sort(expect_m.begin(), expect_m.end());
            std::vector<int> sbar;
            for (int l = 1; l <= n; ++l)
                if (!dropped[static_cast<std::size_t>(l)]) sbar.push_back(l);

            CodeSpec dual = dual_code(code_from_indices(cc, sbar));
            std::vector<int> mset = m_set(cc.ev, dual.gen);
            require(mset == expect_m, tag + " trial " + std::to_string(trial) + ": m-set mismatch");
            int dualb = mu_dual_bound_table(T, mset, dvp).bound;
            require_eq(dualb, primary, tag + " trial " + std::to_string(trial) + ": dual vs primary");
        }
    }
}

void criterion9() {
    // (a) v = 0 reduces to the classical order bound.
    {
        Curve quartic(2, 2, "X^2+X+Y^3", {3, 2});
        Curve sextic(2, 3, "X^4+X^2+X-Y^6-Y^5-Y^3", {3, 2});
        Curve klein(2, 3, "X^3Y+Y^3+X", {2, 3});
        Field f8(2, 3);
        std::vector<CabSpec> specs = list_optimal_cab(f8);
        std::vector<const BoundContext*> ctxs = {&quartic.ctx, &sextic.ctx, &klein.ctx};
        std::vector<BoundContext> cabctxs;
        for (const CabSpec& spec : specs)
            cabctxs.emplace_back(spec.groebner_basis_with_field_equations(), spec.order);
        for (const BoundContext& ctx : cabctxs) ctxs.push_back(&ctx);
        for (const BoundContext* ctx : ctxs)
            for (int i = 1; i <= ctx->n(); ++i)
                require_eq(new_bound(*ctx, i, 0).bound, classic_count(*ctx, i),
                           "v = 0 vs classical count at index " + std::to_string(i));
    }
    // (b) enumeration never beats a designed distance (q^k <= 2^16).
    {
        struct Entry {
            const char* name;
            std::uint64_t p, m;
            const char* poly;
            std::vector<std::int64_t> w;
            int kmax;
        };
        const Entry entries[] = {
            {"quartic", 2, 2, "X^2+X+Y^3", {3, 2}, 8},
            {"sextic", 2, 3, "X^4+X^2+X-Y^6-Y^5-Y^3", {3, 2}, 5},
            {"klein", 2, 3, "X^3Y+Y^3+X", {2, 3}, 5},
        };
        for (const Entry& e : entries) {
            Field f(e.p, e.m);
            IdealSpec ideal(f, 2, {parse_poly(e.poly, f, 2)});
            CodeContext cc = make_code_context(ideal, WeightedOrder(e.w));
            VPolicy vp = natural_v_policy(cc.bctx);
            std::vector<SeriesPoint> ek = ek_series(cc.bctx, vp);
            for (int k = 1; k <= e.kmax; ++k) {
                int designed = ek[static_cast<std::size_t>(k - 1)].delta;
                int truth = true_min_distance(code_from_indices(cc, iota_vec(1, k)));
                require(truth >= designed, std::string(e.name) + " E(" + std::to_string(k) +
                                               "): true " + std::to_string(truth) + " below designed " +
                                               std::to_string(designed));
            }
        }
        Field f8(2, 3);
        CabSpec spec = list_optimal_cab(f8).at(0);
        CodeContext cc = make_code_context(spec);
        VPolicy vp = natural_v_policy(cc.bctx);
        VPolicy dvp = dual_natural_v_policy(cc.bctx);
        for (int delta : {24, 26, 28}) {
            ImprovedCode imp = improved_code(cc.bctx, delta, vp);
            CodeSpec code = code_from_indices(cc, imp.support);
            require(static_cast<std::size_t>(code.k) <= 5, "improved code small enough to enumerate");
            int truth = true_min_distance(code);
            require(truth >= imp.achieved, "improved code at delta " + std::to_string(delta) +
                                               ": true " + std::to_string(truth) + " below designed " +
                                               std::to_string(imp.achieved));
            CodeSpec dualimp = cfim_code(cc, delta, dvp);
            require(static_cast<std::size_t>(dualimp.k) <= 5, "dual improved code small enough");
            int dtruth = true_min_distance(dualimp);
            require(dtruth >= delta, "dual improved code at delta " + std::to_string(delta) +
                                         ": true " + std::to_string(dtruth) + " below designed " +
                                         std::to_string(delta));
        }
    }
    // (c) growing the exclusion set never lowers the bound.
    {
        Curve klein(2, 3, "X^3Y+Y^3+X", {2, 3});
        std::mt19937 rng(777);
        for (int i : {10, 14, 22}) {
            std::vector<int> cand = iota_vec(1, i - 1);
            std::shuffle(cand.begin(), cand.end(), rng);
            int v = natural_v(klein.ctx, i);
            int prev = new_bound(klein.ctx, i, v).bound;
            std::vector<int> excl;
            for (int x : cand) {
                excl.push_back(x);
                int cur = new_bound(klein.ctx, i, v, excl).bound;
                require(cur >= prev, "exclusion growth lowered the bound at index " +
                                         std::to_string(i));
                prev = cur;
            }
        }
    }
    // (d) footprint size equals variety size.
    {
        struct Entry {
            std::uint64_t p, m;
            const char* poly;
            std::vector<std::int64_t> w;
        };
        const Entry entries[] = {
            {2, 2, "X^2+X+Y^3", {3, 2}},
            {2, 3, "X^4+X^2+X-Y^6-Y^5-Y^3", {3, 2}},
            {2, 3, "X^3Y+Y^3+X", {2, 3}},
        };
        for (const Entry& e : entries) {
            Field f(e.p, e.m);
            IdealSpec ideal(f, 2, {parse_poly(e.poly, f, 2)});
            WeightedOrder ord(e.w);
            require_eq(static_cast<std::size_t>(footprint(buchberger(ideal, ord), ord).n()),
                       count_variety_points(ideal), "footprint vs variety (hand curve)");
        }
        for (std::uint64_t m : {3ull, 4ull, 5ull}) {
            Field f(2, m);
            for (const CabSpec& spec : list_optimal_cab(f)) {
                Footprint fp = footprint(spec.groebner_basis_with_field_equations(), spec.order);
                require_eq(static_cast<std::size_t>(fp.n()), spec.zeros,
                           "footprint vs zeros at b = " + std::to_string(spec.b));
                require_eq(count_variety_points(IdealSpec(f, 2, {spec.F})), spec.zeros,
                           "variety vs zeros at b = " + std::to_string(spec.b));
            }
        }
    }
    // (e) the pair bound stays below the true second weight.
    {
        Field f(2, 2);
        IdealSpec ideal(f, 2, {parse_poly("X^2+X+Y^3", f, 2)});
        CodeContext cc = make_code_context(ideal, WeightedOrder({3, 2}));
        VPolicy vp = natural_v_policy(cc.bctx);
        for (int k : {2, 3, 4}) {
            std::vector<int> support = iota_vec(1, k);
            int bound = ghw2_code_bound(cc.bctx, support, vp);
            int truth = true_ghw2(code_from_indices(cc, support));
            require(bound <= truth, "E(" + std::to_string(k) + "): pair bound " +
                                        std::to_string(bound) + " above true second weight " +
                                        std::to_string(truth));
        }
    }
}

void criterion10() {
    std::filesystem::create_directories("acceptance_series");
    Field f16(2, 4), f32(2, 5);

    auto run_family = [](const Field& f, const char* tag) {
        std::vector<std::vector<SeriesPoint>> all;
        std::vector<std::int64_t> bs;
        for (const CabSpec& spec : list_optimal_cab(f)) {
            BoundContext ctx(spec.groebner_basis_with_field_equations(), spec.order);
            VPolicy vp = natural_v_policy(ctx);
            std::vector<SeriesPoint> series = eimp_series(ctx, vp, ctx.n());
            std::string label = "(a,b)=(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")";
            if (spec.b == static_cast<std::int64_t>(f.q()) - 1) label += " norm-trace";
            write_series_csv("acceptance_series/eimp_" + std::string(tag) + "_b" +
                                 std::to_string(spec.b) + ".csv",
                             series, ctx.n(), label);
            check_monotone(series, label);
            all.push_back(std::move(series));
            bs.push_back(spec.b);
        }
        return std::pair(std::move(all), std::move(bs));
    };

    auto [q16series, q16bs] = run_family(f16, "q16");
    require_eq(q16series.size(), static_cast<std::size_t>(4), "GF(16) instance count");
    // Norm-trace series: never strictly above every other instance.
    std::size_t norm_at = 0;
    for (std::size_t t = 0; t < q16bs.size(); ++t)
        if (q16bs[t] == 15) norm_at = t;
    for (std::size_t d = 0; d < q16series[norm_at].size(); ++d) {
        int best_other = 0;
        for (std::size_t t = 0; t < q16series.size(); ++t)
            if (t != norm_at) best_other = std::max(best_other, q16series[t][d].k);
        require(q16series[norm_at][d].k <= best_other,
                "norm-trace strictly best at delta " + std::to_string(d + 1));
    }

    // Spot checks against the closed form (counts of box exponents reaching delta).
    {
        CabSpec spec = list_optimal_cab(f16).at(0); // (8, 10)
        BoundContext ctx(spec.groebner_basis_with_field_equations(), spec.order);
        for (int delta : {13, 40, 100}) {
            int from_series = q16series[0][static_cast<std::size_t>(delta - 1)].k;
            int recount = 0, cf_count = 0;
            for (int i = 1; i <= ctx.n(); ++i) {
                const Monomial& m = ctx.fp().at(i);
                if (new_bound(ctx, i, natural_v(ctx, i)).bound >= delta) ++recount;
                if (closed_form_bound(spec.a, spec.b, 16, m.e[0], m.e[1]) >= delta) ++cf_count;
            }
            require_eq(from_series, recount, "series recount at delta " + std::to_string(delta));
            require(from_series >= cf_count, "series below closed-form count at delta " +
                                                 std::to_string(delta));
        }
    }

    auto [q32series, q32bs] = run_family(f32, "q32");
    require_eq(q32series.size(), static_cast<std::size_t>(6), "GF(32) instance count");

    // Primary and dual improved series on the two-box GF(32) pairing.
    BigPairing& bp = big_pairing();
    VPolicy vp = natural_v_policy(bp.ctx);
    VPolicy dvp = dual_natural_v_policy(bp.ctx);
    std::vector<SeriesPoint> eimp = eimp_series(bp.ctx, vp, bp.ctx.n());
    std::vector<SeriesPoint> cfim = cfim_series(bp.ctx, dvp, bp.ctx.n());
    write_series_csv("acceptance_series/eimp_dualprimary.csv", eimp, bp.ctx.n(), "E_imp");
    write_series_csv("acceptance_series/cfim_dualprimary.csv", cfim, bp.ctx.n(), "C_fim");
    check_monotone(eimp, "E_imp");
    check_monotone(cfim, "C_fim");
    bool eimp_wins = false, cfim_wins = false;
    for (std::size_t d = 0; d < eimp.size(); ++d) {
        if (eimp[d].k > cfim[d].k) eimp_wins = true;
        if (cfim[d].k > eimp[d].k) cfim_wins = true;
    }
    require(eimp_wins && cfim_wins, "expected the two constructions to cross");
}

struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<void()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "quartic over GF(4): footprint, weights, order bound 5 at X", 1.0, criterion1},
        {2, "sextic over GF(8): 32 points, order bound 10, improved bound 13 via sets 13/14", 1.0,
         criterion2},
        {3, "coset polynomials and balance flags over GF(8)/GF(16)/GF(32)", 0.0, criterion3},
        {4, "improved bound reaches the closed form on every optimal instance, q = 8 and 16", 30.0,
         criterion4},
        {5, "GF(8) (4,6): dimensions 2@28 and 15@12, enumerated distance 28", 1.0, criterion5},
        {6, "Klein quartic: 22-point footprint, sets 6/13 at X^3, [22,6,>=11] and [22,6,>=12]", 1.0,
         criterion6},
        {7, "GF(32) coset pairing: 512 zeros, footprint is the two-box union", 120.0, criterion7},
        {8, "dual/primary correspondence: set sizes and bound equality on random supports", 0.0,
         criterion8},
        {9, "properties: classical reduction, oracle domination, exclusion growth, footprint size, "
            "second weight",
         0.0, criterion9},
        {10, "designed-distance series: monotone, norm-trace never strictly best, crossing files",
         600.0, criterion10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string reason;
        try {
            c.run();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (reason.empty() && c.limit_s > 0 && secs > c.limit_s) {
            std::ostringstream os;
            os << "time limit " << c.limit_s << " s exceeded";
            reason = os.str();
        }
        char line[512];
        if (reason.empty()) {
            std::snprintf(line, sizeof line, "PASS  %2d  %s  [%.2f s]", c.id, c.what, secs);
        } else {
            std::snprintf(line, sizeof line, "FAIL  %2d  %s  [%.2f s]  -- %s", c.id, c.what, secs,
                          reason.c_str());
            ++failures;
        }
        std::cout << line << std::endl;
    }
    std::cout << (10 - failures) << " of 10 criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
