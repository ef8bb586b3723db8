#pragma once

// Brute-force oracles kept independent of the library's own algorithms.

#include <bit>

#include "schubkit/weyl.hpp"

namespace schubkit::oracles {

// Bruhat order by the subword criterion: some reduced word of v contains a
// subword that is a reduced word of w. One word of v suffices.
inline bool bruhat_by_subwords(const WeylGroup& g, const WeylElement& w, const WeylElement& v) {
    const Word q = g.canonical_reduced_word(v);
    const int lw = g.length(w);
    const unsigned n = static_cast<unsigned>(q.size());
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        if (std::popcount(bits) != lw) continue;
        Word sub;
        for (unsigned p = 0; p < n; ++p)
            if (bits & (1u << p)) sub.push_back(q[p]);
        if (g.from_word(sub) == w) return true;
    }
    return false;
}

}  // namespace schubkit::oracles
