// Command-line front end: field/coset inspection, curve construction, bound
// reports, designed-distance tables, and the reproduce/oracle suites.
//
// Exit codes: 0 success, 1 computation error, 2 usage error, 3 size guard.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <cabcode/cabcode.hpp>

using namespace cabcode;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_weights(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("--weights expects 'wX,wY'");
    try {
        return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("--weights expects 'wX,wY'");
    }
}

std::string field_name(const Field& f) {
    std::ostringstream os;
    os << "GF(" << f.p();
    if (f.m() > 1) os << "^" << f.m();
    os << ")";
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) {
        if (!s.empty()) s += " ";
        s += std::to_string(x);
    }
    return s;
}

MultiPoly resolve_component(const std::string& s, const Field& f, const CosetTable& t) {
    if (s == "trace") return trace_polynomial(f);
    if (s == "norm") return norm_polynomial(f);
    if (s.rfind("coset:", 0) == 0) {
        try {
            return coset_polynomial(t, std::stoull(s.substr(6)), f);
        } catch (const std::invalid_argument&) {
            throw UsageError("bad coset representative in '" + s + "'");
        }
    }
    return parse_poly(s, f, 1);
}

BoundContext curve_context(const Field& f, const std::string& poly_text,
                           const std::vector<std::int64_t>& weights) {
    WeightedOrder ord(weights);
    IdealSpec ideal(f, 2, {parse_poly(poly_text, f, 2)});
    return BoundContext(buchberger(ideal, ord), ord);
}

void print_case_report(std::ostream& os, const BoundContext& ctx, int i, int v,
                       const std::vector<int>& excl) {
    NewBoundResult r = new_bound(ctx, i, v, excl);
    os << "index " << i << ": " << ctx.fp().at(i).str() << " (weight " << ctx.fp().weight(i)
       << "), v = " << r.v << "\n";
    for (const auto& c : r.cases) {
        if (c.partner)
            os << "case t=" << c.t << " (partner " << c.partner << "): " << c.cardinality() << "\n";
        else
            os << "final case: " << c.cardinality() << "\n";
    }
    os << "bound = " << r.bound << " (FR bound = " << feng_rao_bound(ctx, i) << ")\n";
}

void write_series_csv(const std::string& path, const std::vector<SeriesPoint>& series, int n,
                      const std::string& label) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << "# label: " << label << "\n";
    out << "delta,k,delta_over_n,k_over_n\n";
    for (const auto& pt : series)
        out << pt.delta << "," << pt.k << "," << static_cast<double>(pt.delta) / n << ","
            << static_cast<double>(pt.k) / n << "\n";
}

std::string profile_string(const WeightProfile& prof) {
    std::string s;
    for (const auto& [w, c] : prof.counts) {
        if (!s.empty()) s += " ";
        s += std::to_string(w) + ":" + std::to_string(c);
    }
    return s;
}

// --- plain subcommands -------------------------------------------------------

int run_field_info(const std::string& spec) {
    auto [p, m] = parse_field_spec(spec);
    Field f(p, m);
    std::cout << field_name(f) << ": p = " << f.p() << ", m = " << f.m() << ", q = " << f.q()
              << "\n";
    std::cout << "modulus: " << f.modulus_string() << " (coefficients, ascending:";
    for (std::uint32_t c : f.modulus()) std::cout << " " << c;
    std::cout << ")\n";
    return 0;
}

int run_cosets(const std::string& spec) {
    auto [p, m] = parse_field_spec(spec);
    Field f(p, m);
    CosetTable t = cyclotomic_cosets(p, m);
    std::cout << "cyclotomic cosets of " << p << " mod " << t.n << ":\n";
    for (const auto& coset : t.cosets) {
        std::uint64_t rep = coset.front();
        std::ostringstream os;
        os << "C_" << rep << " = {";
        for (std::size_t k = 0; k < coset.size(); ++k) os << (k ? ", " : "") << coset[k];
        os << "}";
        std::cout << os.str();
        if (rep != 0) {
            std::cout << "  F_" << rep << "(X) = " << print_poly(coset_polynomial(t, rep, f));
            if (is_balanced(t, rep)) std::cout << "  [balanced]";
        }
        std::cout << "\n";
    }
    return 0;
}

void print_cab_json(std::ostream& os, const CabSpec& spec) {
    os << "{\"a\": " << spec.a << ", \"b\": " << spec.b << ", \"wX\": " << spec.wx
       << ", \"wY\": " << spec.wy << ", \"zeros\": " << spec.zeros
       << ", \"optimal\": " << (spec.optimal ? "true" : "false") << "}\n";
}

int run_cab_build(const std::string& fspec, const std::string& gspec, const std::string& hspec) {
    auto [p, m] = parse_field_spec(fspec);
    Field f(p, m);
    CosetTable t = cyclotomic_cosets(p, m);
    CabSpec spec = build_generalized_cab(resolve_component(gspec, f, t),
                                         resolve_component(hspec, f, t), f);
    std::cout << "F = " << print_poly(spec.F) << "\n";
    print_cab_json(std::cout, spec);
    return 0;
}

int run_cab_list(const std::string& fspec) {
    auto [p, m] = parse_field_spec(fspec);
    Field f(p, m);
    std::vector<CabSpec> specs = list_optimal_cab(f);
    std::cout << "optimal pairs over " << field_name(f) << ", G = trace:\n";
    for (const CabSpec& spec : specs) {
        std::cout << "(a,b)=(" << spec.a << "," << spec.b << ")";
        if (spec.b == static_cast<std::int64_t>(f.q()) - 1) std::cout << " norm-trace";
        std::cout << ": F = " << print_poly(spec.F) << ", weights (" << spec.wx << ", " << spec.wy
                  << "), zeros = " << spec.zeros << "\n";
    }
    return 0;
}

struct BoundArgs {
    std::string field, poly, weights, monomial, v = "auto", exclude;
    int index = 0;
    bool json = false;
};

int run_bound(const BoundArgs& a) {
    auto [p, m] = parse_field_spec(a.field);
    Field f(p, m);
    BoundContext ctx = curve_context(f, a.poly, parse_weights(a.weights));
    int i = a.index;
    if (i == 0) {
        if (a.monomial.empty()) throw UsageError("need --index or --monomial");
        MultiPoly mono = parse_poly(a.monomial, f, 2);
        if (mono.terms().size() != 1) throw UsageError("--monomial expects a single monomial");
        i = ctx.fp().index_of(mono.terms().begin()->first);
    }
    int v = 0;
    if (a.v == "auto") {
        v = natural_v(ctx, i);
    } else {
        try {
            v = std::stoi(a.v);
        } catch (const std::exception&) {
            throw UsageError("--v expects 'auto' or a number");
        }
    }
    std::vector<int> excl;
    if (!a.exclude.empty()) {
        std::istringstream is(a.exclude);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) excl.push_back(std::stoi(tok));
    }
    if (a.json) {
        BoundReport rep = min_distance_bound(ctx, {i}, fixed_v_policy(v),
                                             [&excl](int) { return excl; });
        std::cout << bound_report_json(rep);
        return 0;
    }
    std::cout << "curve: " << a.poly << " over " << field_name(f) << ", footprint "
              << ctx.n() << "\n";
    print_case_report(std::cout, ctx, i, v, excl);
    return 0;
}

struct TableArgs {
    std::string field, poly, weights, construction, range, out;
};

int run_code_table(const TableArgs& a) {
    auto [p, m] = parse_field_spec(a.field);
    Field f(p, m);
    BoundContext ctx = curve_context(f, a.poly, parse_weights(a.weights));
    int lo = 1, hi = ctx.n();
    if (!a.range.empty()) {
        auto colon = a.range.find(':');
        if (colon == std::string::npos) throw UsageError("--delta-range expects 'LO:HI'");
        try {
            lo = std::stoi(a.range.substr(0, colon));
            hi = std::stoi(a.range.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("--delta-range expects 'LO:HI'");
        }
        if (lo < 1 || hi < lo) throw UsageError("bad --delta-range");
    }
    std::vector<SeriesPoint> series;
    if (a.construction == "eimp") {
        series = eimp_series(ctx, natural_v_policy(ctx), hi);
    } else if (a.construction == "cfim") {
        series = cfim_series(ctx, dual_natural_v_policy(ctx), hi);
    } else if (a.construction == "ek") {
        series = ek_series(ctx, natural_v_policy(ctx));
    } else {
        throw UsageError("--construction expects eimp, cfim, or ek");
    }
    std::ostringstream body;
    body << "delta,k\n";
    for (const auto& pt : series) {
        if (a.construction != "ek" && (pt.delta < lo || pt.delta > hi)) continue;
        body << pt.delta << "," << pt.k << "\n";
    }
    if (a.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream file(a.out);
        if (!file) throw Error("cannot write " + a.out);
        file << body.str();
    }
    return 0;
}

// --- reproduce ---------------------------------------------------------------

void reproduce_exord(std::ostream& os) {
    Field f(2, 2);
    WeightedOrder ord({3, 2});
    IdealSpec ideal(f, 2, {parse_poly("X^2+X+Y^3", f, 2)});
    BoundContext ctx(buchberger(ideal, ord), ord);
    os << "curve: X^2+X+Y^3 over " << field_name(f) << ", weights (3, 2)\n";
    os << "variety: " << count_variety_points(ideal) << " points, footprint: " << ctx.n()
       << " monomials\n";
    VPolicy vp = natural_v_policy(ctx);
    std::vector<int> sigma = sigma_table(ctx, vp);
    os << "  i  monomial  weight  sigma\n";
    for (int i = 1; i <= ctx.n(); ++i)
        os << std::setw(3) << i << "  " << std::setw(8) << std::left << ctx.fp().at(i).str()
           << std::right << "  " << std::setw(6) << ctx.fp().weight(i) << "  " << std::setw(5)
           << sigma[static_cast<std::size_t>(i)] << "\n";
    os << "order bound at X (index 3) = " << feng_rao_bound(ctx, 3) << "\n";
    std::vector<SeriesPoint> ek = ek_series(ctx, vp);
    os << "designed distances d(E(k)), k = 1..8:";
    for (const auto& pt : ek) os << " " << pt.delta;
    os << "\n";
}

void reproduce_exmot(std::ostream& os) {
    Field f(2, 3);
    BoundContext ctx = curve_context(f, "X^4+X^2+X-Y^6-Y^5-Y^3", {3, 2});
    os << "curve: X^4+X^2+X+Y^6+Y^5+Y^3 over " << field_name(f) << ", weights (3, 2)\n";
    os << "variety: 32 points, footprint: " << ctx.n() << " monomials\n";
    Monomial x3(2);
    x3.e[0] = 3;
    int i = ctx.fp().index_of(x3);
    print_case_report(os, ctx, i, natural_v(ctx, i), {});
}

void reproduce_klein(std::ostream& os, int delta) {
    Field f(2, 3);
    IdealSpec ideal(f, 2, {parse_poly("X^3Y+Y^3+X", f, 2)});
    WeightedOrder ord({2, 3});
    BoundContext ctx(buchberger(ideal, ord), ord);
    os << "curve: X^3Y+Y^3+X over " << field_name(f) << ", weights (2, 3)\n";
    os << "variety: " << count_variety_points(ideal) << " points, footprint: " << ctx.n()
       << " monomials\n";
    VPolicy vp = natural_v_policy(ctx);
    ImprovedCode refined = improved_code_with_exclusions(ctx, delta, vp);
    os << "refined improved code at delta = " << delta << ": support " << join_ints(refined.support)
       << ", dimension " << refined.support.size() << ", bound " << refined.achieved << "\n";
    for (const auto& [pivot, excl] : refined.exclusions)
        if (!excl.empty())
            os << "assumed-zero positions at pivot " << pivot << ": " << join_ints(excl) << "\n";
    // Best plain improved code of the same dimension.
    std::vector<SeriesPoint> series = eimp_series(ctx, vp, ctx.n());
    int want_k = static_cast<int>(refined.support.size());
    int best_delta = 0;
    for (const auto& pt : series)
        if (pt.k >= want_k) best_delta = pt.delta;
    ImprovedCode plain = improved_code(ctx, best_delta, vp);
    os << "plain improved code of dimension " << plain.support.size() << ": support "
       << join_ints(plain.support) << ", bound " << plain.achieved << "\n";
}

void reproduce_q8(std::ostream& os) {
    Field f(2, 3);
    std::vector<CabSpec> specs = list_optimal_cab(f);
    os << "optimal pairs over " << field_name(f) << ", G = trace:\n";
    for (const CabSpec& spec : specs) {
        os << "(a,b)=(" << spec.a << "," << spec.b << ")";
        if (spec.b == 7) os << " norm-trace";
        os << ": F = " << print_poly(spec.F) << ", weights (" << spec.wx << ", " << spec.wy
           << "), zeros = " << spec.zeros << "\n";
    }
    std::vector<std::vector<SeriesPoint>> tables;
    for (const CabSpec& spec : specs) {
        BoundContext ctx(spec.groebner_basis_with_field_equations(), spec.order);
        tables.push_back(eimp_series(ctx, natural_v_policy(ctx), ctx.n()));
    }
    os << "improved dimensions, delta -> k:\n";
    os << "delta  (4,6)  (4,7)\n";
    for (std::size_t d = 0; d < tables[0].size(); ++d)
        os << std::setw(5) << (d + 1) << "  " << std::setw(5) << tables[0][d].k << "  "
           << std::setw(5) << tables[1][d].k << "\n";

    CodeContext cc = make_code_context(specs[0]);
    ImprovedCode imp = improved_code(cc.bctx, 28, natural_v_policy(cc.bctx));
    CodeSpec code = code_from_indices(cc, imp.support);
    os << "[32," << code.k << "] code from support {" << join_ints(imp.support)
       << "}: designed distance " << imp.achieved << "\n";
    WeightProfile prof = weight_profile(code);
    os << "weight profile: " << profile_string(prof) << "\n";
    long long nonzero = 0;
    for (const auto& [w, c] : prof.counts)
        if (w > 0) nonzero += c;
    os << "true minimum distance = " << prof.min_nonzero << " (" << nonzero
       << " nonzero codewords)\n";
}

void reproduce_family(std::ostream& os, std::uint64_t m, const char* tag,
                      const std::vector<int>& sample_deltas, const std::string& outdir) {
    Field f(2, m);
    std::vector<CabSpec> specs = list_optimal_cab(f);
    os << "optimal pairs over " << field_name(f) << ", G = trace:\n";
    for (const CabSpec& spec : specs) {
        os << "(a,b)=(" << spec.a << "," << spec.b << ")";
        if (spec.b == static_cast<std::int64_t>(f.q()) - 1) os << " norm-trace";
        os << ": weights (" << spec.wx << ", " << spec.wy << "), zeros = " << spec.zeros << "\n";
    }
    std::filesystem::create_directories(outdir);
    std::vector<std::vector<SeriesPoint>> tables;
    std::vector<std::string> files;
    std::size_t norm_at = specs.size();
    for (std::size_t t = 0; t < specs.size(); ++t) {
        const CabSpec& spec = specs[t];
        std::cerr << "[" << tag << "] (a,b)=(" << spec.a << "," << spec.b << ") series...\n";
        BoundContext ctx(spec.groebner_basis_with_field_equations(), spec.order);
        std::vector<SeriesPoint> series = eimp_series(ctx, natural_v_policy(ctx), ctx.n());
        std::string label = "(a,b)=(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")";
        if (spec.b == static_cast<std::int64_t>(f.q()) - 1) {
            label += " norm-trace";
            norm_at = t;
        }
        std::string path = outdir + "/eimp_" + tag + "_b" + std::to_string(spec.b) + ".csv";
        write_series_csv(path, series, ctx.n(), label);
        files.push_back(path);
        tables.push_back(std::move(series));
    }
    os << "series written:";
    for (const std::string& p : files) os << " " << p;
    os << "\n";
    if (norm_at < specs.size()) {
        bool strictly_best = false;
        for (std::size_t d = 0; d < tables[norm_at].size(); ++d) {
            int other = 0;
            for (std::size_t t = 0; t < tables.size(); ++t)
                if (t != norm_at) other = std::max(other, tables[t][d].k);
            if (tables[norm_at][d].k > other) strictly_best = true;
        }
        os << "norm-trace strictly best somewhere: " << (strictly_best ? "yes" : "no") << "\n";
    }
    os << "sample dimensions, delta -> k per pair:\n";
    os << "delta";
    for (const CabSpec& spec : specs) os << "  b=" << std::setw(2) << spec.b;
    os << "\n";
    for (int delta : sample_deltas) {
        os << std::setw(5) << delta;
        for (std::size_t t = 0; t < tables.size(); ++t)
            os << "  " << std::setw(4) << tables[t][static_cast<std::size_t>(delta - 1)].k;
        os << "\n";
    }
}

void reproduce_dualprimary(std::ostream& os, const std::string& outdir) {
    Field f(2, 5);
    CosetTable t = cyclotomic_cosets(2, 5);
    CabSpec spec = build_generalized_cab(coset_polynomial(t, 5, f), coset_polynomial(t, 11, f), f);
    os << "pairing: F = F_5(X) + F_11(Y) over " << field_name(f) << "\n";
    os << "F = " << print_poly(spec.F) << "\n";
    os << "weights (" << spec.wx << ", " << spec.wy << "), a = " << spec.a << ", b = " << spec.b
       << "\n";
    std::size_t grid = count_variety_points(IdealSpec(f, 2, {spec.F}));
    os << "zeros = " << spec.zeros << " (grid check: " << grid << "), optimal: "
       << (spec.optimal ? "yes" : "no") << "\n";
    std::cerr << "[dualprimary] Groebner basis...\n";
    BoundContext ctx(buchberger(IdealSpec(f, 2, {spec.F}), spec.order), spec.order);
    os << "footprint: " << ctx.n() << " monomials\n";
    bool boxes = true;
    for (int i = 1; i <= ctx.n(); ++i) {
        const Monomial& mon = ctx.fp().at(i);
        if (!((mon.e[0] < 12 && mon.e[1] < 32) || (mon.e[0] >= 12 && mon.e[0] < 20 && mon.e[1] < 16)))
            boxes = false;
    }
    os << "two-box union (a1 < 12, a2 < 32) + (12 <= a1 < 20, a2 < 16): " << (boxes ? "yes" : "no")
       << "\n";
    std::filesystem::create_directories(outdir);
    std::cerr << "[dualprimary] primary series...\n";
    std::vector<SeriesPoint> eimp = eimp_series(ctx, natural_v_policy(ctx), ctx.n());
    std::cerr << "[dualprimary] dual series...\n";
    std::vector<SeriesPoint> cfim = cfim_series(ctx, dual_natural_v_policy(ctx), ctx.n());
    write_series_csv(outdir + "/eimp_dualprimary.csv", eimp, ctx.n(), "E_imp");
    write_series_csv(outdir + "/cfim_dualprimary.csv", cfim, ctx.n(), "C_fim");
    os << "series written: " << outdir << "/eimp_dualprimary.csv " << outdir
       << "/cfim_dualprimary.csv\n";
    int first_eimp = 0, first_cfim = 0;
    for (std::size_t d = 0; d < eimp.size(); ++d) {
        if (!first_eimp && eimp[d].k > cfim[d].k) first_eimp = static_cast<int>(d) + 1;
        if (!first_cfim && cfim[d].k > eimp[d].k) first_cfim = static_cast<int>(d) + 1;
    }
    os << "first delta where the primary construction is strictly better: " << first_eimp << "\n";
    os << "first delta where the dual construction is strictly better: " << first_cfim << "\n";
    os << "sample dimensions, delta -> k:\n";
    os << "delta  E_imp  C_fim\n";
    for (int delta : {32, 64, 128, 192, 256, 320, 384, 448, 512})
        os << std::setw(5) << delta << "  " << std::setw(5)
           << eimp[static_cast<std::size_t>(delta - 1)].k << "  " << std::setw(5)
           << cfim[static_cast<std::size_t>(delta - 1)].k << "\n";
}

int run_reproduce(const std::string& id, int delta, const std::string& outdir, bool allow_long) {
    if (id == "exord") {
        reproduce_exord(std::cout);
    } else if (id == "exmot") {
        reproduce_exmot(std::cout);
    } else if (id == "klein") {
        reproduce_klein(std::cout, delta);
    } else if (id == "q8") {
        reproduce_q8(std::cout);
    } else if (id == "q16") {
        reproduce_family(std::cout, 4, "q16", {8, 16, 32, 64, 128}, outdir);
    } else if (id == "q32") {
        reproduce_family(std::cout, 5, "q32", {16, 64, 128, 256, 512}, outdir);
    } else if (id == "q64") {
        if (!allow_long) throw UsageError("reproduce q64 runs for minutes; pass --allow-long");
        reproduce_family(std::cout, 6, "q64", {64, 256, 512, 1024, 2048}, outdir);
    } else if (id == "dualprimary") {
        reproduce_dualprimary(std::cout, outdir);
    } else {
        throw UsageError("unknown example id '" + id + "'");
    }
    return 0;
}

// --- oracle ------------------------------------------------------------------

int run_oracle_check() {
    int checks = 0, violations = 0;
    auto report = [&](const std::string& name, int n, int k, int designed, int truth) {
        ++checks;
        bool ok = truth >= designed;
        if (!ok) ++violations;
        std::cout << (ok ? "ok        " : "VIOLATION ") << name << ": n=" << n << " k=" << k
                  << " designed=" << designed << " true=" << truth << "\n";
    };

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
            CodeSpec code = code_from_indices(cc, [&] {
                std::vector<int> s;
                for (int i = 1; i <= k; ++i) s.push_back(i);
                return s;
            }());
            report(std::string(e.name) + " E(" + std::to_string(k) + ")", code.n, code.k,
                   ek[static_cast<std::size_t>(k - 1)].delta, true_min_distance(code));
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
        report("(4,6) improved delta=" + std::to_string(delta), code.n, code.k, imp.achieved,
               true_min_distance(code));
        CodeSpec dual = cfim_code(cc, delta, dvp);
        report("(4,6) dual improved delta=" + std::to_string(delta), dual.n, dual.k, delta,
               true_min_distance(dual));
    }

    {
        Field f(2, 2);
        IdealSpec ideal(f, 2, {parse_poly("X^2+X+Y^3", f, 2)});
        CodeContext qcc = make_code_context(ideal, WeightedOrder({3, 2}));
        VPolicy qvp = natural_v_policy(qcc.bctx);
        for (int k : {2, 3, 4}) {
            std::vector<int> support;
            for (int i = 1; i <= k; ++i) support.push_back(i);
            int bound = ghw2_code_bound(qcc.bctx, support, qvp);
            int truth = true_ghw2(code_from_indices(qcc, support));
            ++checks;
            bool ok = bound <= truth;
            if (!ok) ++violations;
            std::cout << (ok ? "ok        " : "VIOLATION ") << "quartic E(" << k
                      << ") second weight: bound=" << bound << " true=" << truth << "\n";
        }
    }

    std::cout << checks << " checks, " << violations << " violations\n";
    return violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine variety codes from coset-polynomial curves: bounds, tables, oracles"};
    app.require_subcommand(1);

    auto* field_cmd = app.add_subcommand("field", "field inspection");
    field_cmd->require_subcommand(1);
    std::string field_spec;
    auto* info_cmd = field_cmd->add_subcommand("info", "print field parameters and modulus");
    info_cmd->add_option("spec", field_spec, "field as p^m, e.g. 2^3")->required();

    std::string cosets_spec;
    auto* cosets_cmd = app.add_subcommand("cosets", "cyclotomic cosets and coset polynomials");
    cosets_cmd->add_option("spec", cosets_spec, "field as p^m")->required();

    auto* cab_cmd = app.add_subcommand("cab", "curve construction from univariate components");
    cab_cmd->require_subcommand(1);
    std::string cab_field, cab_g, cab_h;
    auto* build_cmd = cab_cmd->add_subcommand("build", "build G(X) - H(Y) and report parameters");
    build_cmd->add_option("--field", cab_field, "field as p^m")->required();
    build_cmd->add_option("--gx", cab_g, "component applied to X: trace, norm, coset:R, or a polynomial")
        ->required();
    build_cmd->add_option("--hy", cab_h, "component applied to Y: trace, norm, coset:R, or a polynomial")
        ->required();
    std::string list_field;
    auto* list_cmd = cab_cmd->add_subcommand("list", "all optimal pairs with G = trace");
    list_cmd->add_option("--field", list_field, "field as p^m")->required();

    BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand("bound", "per-index bound report");
    bound_cmd->add_option("--field", bound_args.field, "field as p^m")->required();
    bound_cmd->add_option("--poly", bound_args.poly, "curve polynomial in X and Y")->required();
    bound_cmd->add_option("--weights", bound_args.weights, "wX,wY")->required();
    bound_cmd->add_option("--index", bound_args.index, "footprint index (1-based)");
    bound_cmd->add_option("--monomial", bound_args.monomial, "footprint monomial, e.g. X^3");
    bound_cmd->add_option("--v", bound_args.v, "auto or a number (default auto)");
    bound_cmd->add_option("--exclude", bound_args.exclude, "comma-separated assumed-zero indices");
    bound_cmd->add_flag("--json", bound_args.json, "emit the report as JSON");

    auto* code_cmd = app.add_subcommand("code", "code tables");
    code_cmd->require_subcommand(1);
    TableArgs table_args;
    auto* table_cmd = code_cmd->add_subcommand("table", "designed-distance table as CSV");
    table_cmd->add_option("--field", table_args.field, "field as p^m")->required();
    table_cmd->add_option("--poly", table_args.poly, "curve polynomial in X and Y")->required();
    table_cmd->add_option("--weights", table_args.weights, "wX,wY")->required();
    table_cmd->add_option("--construction", table_args.construction, "eimp, cfim, or ek")
        ->required();
    table_cmd->add_option("--delta-range", table_args.range, "LO:HI (default 1:n)");
    table_cmd->add_option("--out", table_args.out, "write CSV to this file instead of stdout");

    std::string repro_id, repro_out = "series";
    int repro_delta = 12;
    bool allow_long = false;
    auto* repro_cmd = app.add_subcommand("reproduce", "rerun a named worked example");
    repro_cmd
        ->add_option("id", repro_id,
                     "exord, exmot, klein, q8, q16, q32, q64, or dualprimary")
        ->required();
    repro_cmd->add_option("--delta", repro_delta, "target distance for klein (default 12)");
    repro_cmd->add_option("--out", repro_out, "directory for series files (default series)");
    repro_cmd->add_flag("--allow-long", allow_long, "permit the long q64 run");

    auto* oracle_cmd = app.add_subcommand("oracle", "enumeration cross-checks");
    oracle_cmd->require_subcommand(1);
    auto* check_cmd = oracle_cmd->add_subcommand("check", "bounds against enumerated distances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (info_cmd->parsed()) return run_field_info(field_spec);
        if (cosets_cmd->parsed()) return run_cosets(cosets_spec);
        if (build_cmd->parsed()) return run_cab_build(cab_field, cab_g, cab_h);
        if (list_cmd->parsed()) return run_cab_list(list_field);
        if (bound_cmd->parsed()) return run_bound(bound_args);
        if (table_cmd->parsed()) return run_code_table(table_args);
        if (repro_cmd->parsed()) return run_reproduce(repro_id, repro_delta, repro_out, allow_long);
        if (check_cmd->parsed()) return run_oracle_check();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SizeExceeded& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
