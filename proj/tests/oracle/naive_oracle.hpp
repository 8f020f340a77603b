#pragma once

// Deliberately plain re-implementation of the function-class predicates and property
// enumeration, used to cross-check the library. Functions are vectors of bits, traces are
// std::set of vectors, and every subset of the domain is inspected.

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "infowidth/core_measures.hpp"

namespace naive {

using Function = std::vector<int>;  // values f(1..n) at index 0..n-1
using Class = std::vector<Function>;

inline Function decode(unsigned n, std::uint32_t code) {
    Function f(n);
    for (unsigned i = 0; i < n; ++i) f[i] = (code >> i) & 1;
    return f;
}

inline std::vector<std::vector<unsigned>> subsets_of_domain(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> e;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) e.push_back(i);
        out.push_back(e);
    }
    return out;
}

inline unsigned vc(unsigned n, const Class& g) {
    unsigned best = 0;
    for (const auto& e : subsets_of_domain(n)) {
        std::set<std::vector<int>> patterns;
        for (const auto& f : g) {
            std::vector<int> r;
            for (unsigned i : e) r.push_back(f[i]);
            patterns.insert(r);
        }
        if (patterns.size() == (std::size_t{1} << e.size()) && e.size() > best) best = static_cast<unsigned>(e.size());
    }
    return best;
}

inline unsigned ldim(unsigned n, const Class& g) {
    unsigned best = 0;
    for (const auto& e : subsets_of_domain(n)) {
        bool agree = true;
        for (const auto& f : g)
            for (unsigned i : e)
                if (f[i] != g.front()[i]) agree = false;
        if (agree && e.size() > best) best = static_cast<unsigned>(e.size());
    }
    return best;
}

enum class Kind { L, V, VC, VSample };

struct Spec {
    Kind kind;
    unsigned d;
    std::vector<std::pair<unsigned, int>> sample;  // 1-based points
};

inline bool holds(unsigned n, const Class& g, const Spec& s) {
    switch (s.kind) {
        case Kind::L: return ldim(n, g) >= s.d;
        case Kind::V: return vc(n, g) < s.d;
        case Kind::VC: return vc(n, g) >= s.d;
        case Kind::VSample:
            for (const auto& f : g)
                for (const auto& [pt, label] : s.sample)
                    if (f[pt - 1] != label) return false;
            return vc(n, g) < s.d;
    }
    return false;
}

/// Counts of satisfying classes by cardinality, over every nonempty class on [n].
inline infowidth::DensityCounts counts(unsigned n, const Spec& s) {
    const unsigned nf = 1u << n;
    infowidth::DensityCounts out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nf); ++mask) {
        Class g;
        for (unsigned code = 0; code < nf; ++code)
            if (mask >> code & 1) g.push_back(decode(n, code));
        if (holds(n, g, s)) out[g.size()] += 1;
    }
    return out;
}

/// Whole-space measures of the satisfying classes, computed from their counts in plain
/// long double arithmetic.
struct Measures {
    double count = 0;
    double information = 0;
    double description = 0;
};

inline Measures measures(unsigned n, const Spec& s) {
    const auto c = counts(n, s);
    long double total = 0, weighted = 0;
    for (const auto& [k, cnt] : c) {
        const long double m = static_cast<long double>(cnt);
        total += m;
        weighted += m * std::log2(static_cast<long double>(k));
    }
    Measures out;
    out.count = static_cast<double>(total);
    out.information = static_cast<double>(static_cast<long double>(n) - weighted / total);
    out.description = static_cast<double>((1u << n) - std::log2(total));
    return out;
}

}  // namespace naive
