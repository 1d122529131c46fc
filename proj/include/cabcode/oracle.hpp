#ifndef CABCODE_ORACLE_HPP
#define CABCODE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "codes.hpp"

namespace cabcode {

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, int expo, std::uint64_t guard) {
    std::uint64_t r = 1;
    for (int e = 0; e < expo; ++e) {
        if (r > guard / base) throw SizeExceeded("enumeration space exceeds the oracle guard");
        r *= base;
    }
    if (r > guard) throw SizeExceeded("enumeration space exceeds the oracle guard");
    return r;
}

inline int weight_of(const std::vector<std::uint32_t>& w) {
    int c = 0;
    for (std::uint32_t x : w)
        if (x) ++c;
    return c;
}

} // namespace detail

struct WeightProfile {
    std::map<int, long long> counts; // weight -> number of codewords
    int min_nonzero = 0;
};

/// Exhaustive weight distribution of the row space of gen, zero word
/// included. Messages are walked as a base-q odometer with delta updates of
/// the running codeword, so the cost is about one row operation per message.
inline WeightProfile weight_profile(const CodeSpec& code, std::uint64_t guard = std::uint64_t(1) << 16) {
    const Field& f = code.gen.field();
    const std::size_t k = code.gen.rows();
    const std::size_t n = code.gen.cols();
    const std::uint64_t total = detail::checked_power(f.q(), static_cast<int>(k), guard);

    WeightProfile prof;
    std::vector<std::uint32_t> msg(k, 0);
    std::vector<std::uint32_t> word(n, 0);
    prof.counts[0] = 1;
    prof.min_nonzero = static_cast<int>(n) + 1;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t r = 0;
        while (true) {
            const std::uint32_t old = msg[r];
            const std::uint32_t next = (old + 1 == f.q()) ? 0 : old + 1;
            msg[r] = next;
            const std::uint32_t delta = f.subv(next, old);
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint32_t g = code.gen.at(r, c);
                if (g) word[c] = f.addv(word[c], f.mulv(delta, g));
            }
            if (next != 0) break;
            ++r; // carry
        }
        const int w = detail::weight_of(word);
        ++prof.counts[w];
        if (w < prof.min_nonzero) prof.min_nonzero = w;
    }
    return prof;
}

/// True minimum distance by full enumeration of q^k codewords.
inline int true_min_distance(const CodeSpec& code, std::uint64_t guard = std::uint64_t(1) << 16) {
    return weight_profile(code, guard).min_nonzero;
}

/// True second generalized Hamming weight: the smallest support of a
/// 2-dimensional subcode. Subspaces are enumerated once each through their
/// reduced-echelon message bases (pivot pair j1 < j2, free entries of row 1
/// after j1 and away from j2, free entries of row 2 after j2).
inline int true_ghw2(const CodeSpec& code, std::uint64_t guard = std::uint64_t(1) << 20) {
    const Field& f = code.gen.field();
    const std::size_t k = code.gen.rows();
    const std::size_t n = code.gen.cols();
    if (k < 2) throw BadRange("second weight needs dimension at least 2");

    const std::uint64_t q = f.q();
    std::uint64_t count = 0;
    for (std::size_t j1 = 0; j1 + 1 < k; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < k; ++j2) {
            std::uint64_t c = detail::checked_power(q, static_cast<int>((k - j1 - 2) + (k - j2 - 1)), guard);
            if (count > guard - c) throw SizeExceeded("subspace count exceeds the oracle guard");
            count += c;
        }

    auto encode = [&](const std::vector<std::uint32_t>& msg) {
        std::vector<std::uint32_t> word(n, 0);
        for (std::size_t r = 0; r < k; ++r) {
            if (!msg[r]) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const std::uint32_t g = code.gen.at(r, c);
                if (g) word[c] = f.addv(word[c], f.mulv(msg[r], g));
            }
        }
        return word;
    };

    int best = static_cast<int>(n) + 1;
    std::vector<std::uint32_t> m1(k, 0), m2(k, 0);
    for (std::size_t j1 = 0; j1 + 1 < k; ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < k; ++j2) {
            std::vector<std::size_t> free1, free2;
            for (std::size_t c = j1 + 1; c < k; ++c)
                if (c != j2) free1.push_back(c);
            for (std::size_t c = j2 + 1; c < k; ++c) free2.push_back(c);
            std::vector<std::size_t> slots = free1;
            slots.insert(slots.end(), free2.begin(), free2.end());
            const std::size_t nf1 = free1.size();

            std::vector<std::uint32_t> vals(slots.size(), 0);
            while (true) {
                std::fill(m1.begin(), m1.end(), 0);
                std::fill(m2.begin(), m2.end(), 0);
                m1[j1] = 1;
                m2[j2] = 1;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    (s < nf1 ? m1 : m2)[slots[s]] = vals[s];
                std::vector<std::uint32_t> w1 = encode(m1);
                std::vector<std::uint32_t> w2 = encode(m2);
                int supp = 0;
                for (std::size_t c = 0; c < n; ++c)
                    if (w1[c] || w2[c]) ++supp;
                if (supp < best) best = supp;

                std::size_t s = 0;
                while (s < vals.size() && ++vals[s] == q) vals[s++] = 0;
                if (s == vals.size()) break;
            }
        }
    }
    return best;
}

} // namespace cabcode

#endif
