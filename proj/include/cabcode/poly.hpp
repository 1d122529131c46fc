#ifndef CABCODE_POLY_HPP
#define CABCODE_POLY_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace cabcode {

/// Multivariate polynomial over one Field. Terms are kept in a std::map
/// keyed by the plain lexicographic monomial comparison, which gives every
/// polynomial a canonical form independent of any weighted order; zero
/// coefficients are never stored. Leading-term queries take the order as an
/// argument.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, std::uint32_t>;

    MultiPoly(const Field& f, std::size_t arity) : f_(&f), arity_(arity) {}

    static MultiPoly zero(const Field& f, std::size_t arity) { return MultiPoly(f, arity); }

    static MultiPoly monomial(const Field& f, const Monomial& m, std::uint32_t coeff = 1) {
        MultiPoly r(f, m.arity());
        if (coeff != 0) r.terms_.emplace(m, coeff);
        return r;
    }

    const Field& field() const { return *f_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Element coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return Element(*f_, it == terms_.end() ? 0u : it->second);
    }

    void set_coeff(const Monomial& m, std::uint32_t c) {
        if (m.arity() != arity_) throw ArityMismatch("term arity vs polynomial arity");
        if (c == 0) terms_.erase(m);
        else terms_[m] = c;
    }

    void add_term(const Monomial& m, std::uint32_t c) {
        if (m.arity() != arity_) throw ArityMismatch("term arity vs polynomial arity");
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = f_->addv(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.f_ == b.f_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, a.f_->negv(c));
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r(*a.f_, a.arity_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, a.f_->mulv(ca, cb));
        return r;
    }

    MultiPoly scaled(std::uint32_t c) const {
        MultiPoly r(*f_, arity_);
        if (c == 0) return r;
        for (const auto& [m, cf] : terms_) r.terms_.emplace(m, f_->mulv(cf, c));
        return r;
    }

    MultiPoly times_term(const Monomial& m, std::uint32_t c) const {
        MultiPoly r(*f_, arity_);
        if (c == 0) return r;
        for (const auto& [mm, cf] : terms_) r.terms_.emplace(mm * m, f_->mulv(cf, c));
        return r;
    }

    Monomial leading_monomial(const WeightedOrder& ord) const {
        if (terms_.empty()) throw ZeroPolynomial("leading monomial of zero");
        auto it = terms_.begin();
        const Monomial* best = &it->first;
        for (++it; it != terms_.end(); ++it)
            if (ord.less(*best, it->first)) best = &it->first;
        return *best;
    }

    Element leading_coeff(const WeightedOrder& ord) const { return coeff(leading_monomial(ord)); }

    MultiPoly monic(const WeightedOrder& ord) const {
        std::uint32_t lc = leading_coeff(ord).v;
        if (lc == 1) return *this;
        return scaled(f_->invv(lc));
    }

    /// Number of support monomials attaining the maximal weight.
    std::size_t top_weight_count(const WeightedOrder& ord) const {
        if (terms_.empty()) return 0;
        std::int64_t best = 0;
        std::size_t count = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t w = ord.weight(m);
            if (count == 0 || w > best) { best = w; count = 1; }
            else if (w == best) ++count;
        }
        return count;
    }

    /// Re-expresses a univariate polynomial (arity 1) in variable `var` of an
    /// arity-`arity` ring.
    MultiPoly embedded(std::size_t arity, std::size_t var) const {
        if (arity_ != 1) throw ArityMismatch("only univariate polynomials can be embedded");
        if (var >= arity) throw BadRange("variable index out of range");
        MultiPoly r(*f_, arity);
        for (const auto& [m, c] : terms_) {
            Monomial mm(arity);
            mm.e[var] = m.e[0];
            r.terms_.emplace(mm, c);
        }
        return r;
    }

    std::int64_t degree() const {
        std::int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// Evaluation at a point given by coordinate representations. `powers`
    /// may carry precomputed coordinate powers (powers[k][e] = x_k^e).
    std::uint32_t eval(const std::vector<std::uint32_t>& point) const {
        if (point.size() != arity_) throw ArityMismatch("point arity vs polynomial arity");
        std::uint32_t acc = 0;
        for (const auto& [m, c] : terms_) {
            std::uint32_t t = c;
            for (std::size_t k = 0; k < arity_; ++k)
                if (m.e[k] != 0) t = f_->mulv(t, f_->powv(point[k], static_cast<std::uint64_t>(m.e[k])));
            acc = f_->addv(acc, t);
        }
        return acc;
    }

private:
    const Field* f_;
    std::size_t arity_;
    TermMap terms_;

    void check_compatible(const MultiPoly& o) const {
        if (f_ != o.f_) throw MixedFields("polynomials over different fields");
        if (arity_ != o.arity_) throw ArityMismatch("polynomials of different arities");
    }
};

struct DivisionResult {
    std::vector<MultiPoly> quotients;
    MultiPoly remainder;
};

/// Multivariate division with remainder: divisors tried in list order, the
/// leading term of the running polynomial is reduced when divisible, moved
/// to the remainder otherwise. No remainder monomial is divisible by any
/// divisor's leading monomial. Compile with CABCODE_VERIFY_DIVISION to check
/// the identity f = sum q_i g_i + r exactly on every call.
inline DivisionResult divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                             const WeightedOrder& ord) {
    const Field& fld = f.field();
    struct DivisorInfo { Monomial lm; std::uint32_t lc_inv; };
    std::vector<DivisorInfo> info;
    info.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) throw ZeroDivisor("zero polynomial among divisors");
        if (&g.field() != &fld) throw MixedFields("divisor over a different field");
        if (g.arity() != f.arity()) throw ArityMismatch("divisor arity vs dividend arity");
        Monomial lm = g.leading_monomial(ord);
        info.push_back({lm, fld.invv(g.coeff(lm).v)});
    }

    // Working copy ordered by the weighted order so the leading term is the
    // last map entry.
    std::map<Monomial, std::uint32_t, WeightedOrder::Less> work(ord.less_fn());
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    DivisionResult res{std::vector<MultiPoly>(divisors.size(), MultiPoly::zero(fld, f.arity())),
                       MultiPoly::zero(fld, f.arity())};

    while (!work.empty()) {
        auto lead = std::prev(work.end());
        const Monomial lm = lead->first;
        const std::uint32_t lc = lead->second;
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lm.divisible_by(info[i].lm)) continue;
            Monomial q = lm.divided_by(info[i].lm);
            std::uint32_t qc = fld.mulv(lc, info[i].lc_inv);
            res.quotients[i].add_term(q, qc);
            for (const auto& [m, c] : divisors[i].terms()) {
                Monomial key = m * q;
                std::uint32_t delta = fld.negv(fld.mulv(c, qc));
                auto [it, fresh] = work.emplace(key, delta);
                if (!fresh) {
                    it->second = fld.addv(it->second, delta);
                    if (it->second == 0) work.erase(it);
                }
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.set_coeff(lm, lc);
            work.erase(lead);
        }
    }

#ifdef CABCODE_VERIFY_DIVISION
    MultiPoly check = res.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) check = check + res.quotients[i] * divisors[i];
    if (check != f) throw Error("division identity violated");
#endif
    return res;
}

inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                             const WeightedOrder& ord) {
    return divide(f, divisors, ord).remainder;
}

// --- text format -----------------------------------------------------------

/// Grammar accepted by parse_poly: sum of terms, each an optional integer or
/// e{rep} coefficient followed by variable powers ("X^4+X^2+X-Y^6-Y^5-Y^3",
/// "2X^3Y", "e{5}XY^2"). Variables are X, Y, Z, W up to arity 4; X1..X4 are
/// accepted as aliases. Integer coefficients are taken mod p; e{r} selects
/// the field element with representation r.
inline MultiPoly parse_poly(const std::string& text, const Field& f, std::size_t arity) {
    if (arity == 0 || arity > 4) throw ParseError("parser supports arity 1..4");
    MultiPoly out(f, arity);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial text");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        bool negate = false;
        if (text[i] == '+' || text[i] == '-') {
            negate = text[i] == '-';
            ++i;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-' between terms");
        }
        std::uint32_t c = 1;
        bool saw_token = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            long long k = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                k = k * 10 + (text[i++] - '0');
            c = f.from_int(k);
            saw_token = true;
        } else if (i + 1 < text.size() && text[i] == 'e' && text[i + 1] == '{') {
            i += 2;
            std::uint64_t r = 0;
            bool got = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                r = r * 10 + static_cast<std::uint64_t>(text[i++] - '0');
                got = true;
            }
            if (!got || i == text.size() || text[i] != '}') throw ParseError("malformed e{rep} coefficient");
            ++i;
            if (r >= f.q()) throw ParseError("element representation out of range");
            c = static_cast<std::uint32_t>(r);
            saw_token = true;
        }
        Monomial m(arity);
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
            if (i == text.size()) break;
            char ch = text[i];
            int var = -1;
            if (ch == 'X') var = 0;
            else if (ch == 'Y') var = 1;
            else if (ch == 'Z') var = 2;
            else if (ch == 'W') var = 3;
            if (var < 0) break;
            ++i;
            if (ch == 'X' && i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                // X1..X4 alias form; a bare digit never denotes an exponent.
                int idx = text[i] - '0';
                if (idx < 1 || static_cast<std::size_t>(idx) > arity)
                    throw ParseError("variable index out of range (write exponents as X^k)");
                ++i;
                var = idx - 1;
            }
            if (static_cast<std::size_t>(var) >= arity) throw ParseError("variable outside ring arity");
            std::int32_t exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("missing exponent after '^'");
                long long e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    e = e * 10 + (text[i++] - '0');
                if (e > (1 << 24)) throw ParseError("exponent too large");
                exp = static_cast<std::int32_t>(e);
            }
            m.e[var] += exp;
            saw_token = true;
        }
        if (!saw_token) throw ParseError("empty term in polynomial text");
        if (negate) c = f.negv(c);
        out.add_term(m, c);
        any = true;
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw ParseError(std::string("unexpected character '") + text[i] + "' in polynomial text");
    }
    if (!any) throw ParseError("empty polynomial text");
    return out;
}

/// Canonical printing: terms in decreasing plain-lexicographic order joined
/// by '+', prime-subfield coefficients as integers, anything else as e{rep}.
/// parse_poly(print_poly(f)) == f for every polynomial.
inline std::string print_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const Field& f = p.field();
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty()) s += "+";
        std::string cs;
        if (f.in_prime_subfield(c)) {
            if (c != 1 || m.is_one()) cs = std::to_string(c);
        } else {
            cs = "e{" + std::to_string(c) + "}";
        }
        s += cs;
        if (!m.is_one()) s += m.str();
    }
    return s;
}

inline std::string print_poly_ordered(const MultiPoly& p, const WeightedOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<const Monomial*> mons;
    for (const auto& [m, c] : p.terms()) mons.push_back(&m);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial* a, const Monomial* b) { return ord.less(*b, *a); });
    const Field& f = p.field();
    std::string s;
    for (const Monomial* m : mons) {
        std::uint32_t c = p.coeff(*m).v;
        if (!s.empty()) s += "+";
        if (f.in_prime_subfield(c)) {
            if (c != 1 || m->is_one()) s += std::to_string(c);
        } else {
            s += "e{" + std::to_string(c) + "}";
        }
        if (!m->is_one()) s += m->str();
    }
    return s;
}

} // namespace cabcode

#endif
