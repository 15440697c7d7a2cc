// Rewriting a polynomial of order >= 4 in the quadric-with-parameters shape
//
//     f = z^2 h + (x_1 - a_1 z) g_1 + ... + (x_n - a_n z) g_n,
//
// with ord(g_i) >= 3 and ord(h) >= 2. The engine is the pair of degree-2
// identities
//
//     x_i z   = (x_i - a_i z) z   + a_i z^2
//     x_i x_j = (x_i - a_i z) x_j + a_i (x_j z),
//
// applied monomial by monomial: each monomial w of f splits off a canonical
// quadratic tail q, w = q * w', the tail is rewritten by the identities and
// the residual w' multiplies through. The tail choice (two occurrences of
// the largest variables under x_1 < ... < x_n < z, so z's are consumed
// first) makes the output a deterministic function of f.
#pragma once

#include <cstdint>
#include <vector>

#include "mfwild/series.hpp"

namespace mfwild {

template <class K>
struct A1Decomposition {
    Series<K> f;                 // the input, parameter-free
    Series<K> h;                 // order >= 2
    std::vector<Series<K>> g;    // order >= 3 each, one per variable

    size_t nvars() const { return g.size(); }
};

/// Expansion of a degree-2 monomial as an element of (z^2) + I*m, returned
/// as the pair (h-part, g-parts) with q = z^2 * h_part + sum (x_i - a_i z) g_parts[i].
template <class K>
struct QuadraticRewrite {
    Series<K> h_part;
    std::vector<Series<K>> g_parts;
};

template <class K>
QuadraticRewrite<K> rewrite_quadratic(const Expv& q, size_t nvars) {
    if (q.size() != nvars + 1) throw config_error("monomial length does not match variable count");
    if (total_degree(q) != 2)
        throw precondition_error("DEGREE", "rewrite_quadratic needs a degree-2 monomial, got degree " +
                                               std::to_string(total_degree(q)));
    SeriesRing<K> ring(static_cast<uint32_t>(nvars), static_cast<uint32_t>(nvars));
    QuadraticRewrite<K> r{ring.zero(), std::vector<Series<K>>(nvars, ring.zero())};

    auto ai = [&](size_t i) { return ParamPoly<K>::param(i, nvars); };

    if (q[nvars] == 2) {
        // z^2
        r.h_part = ring.one();
        return r;
    }
    if (q[nvars] == 1) {
        // x_i z = (x_i - a_i z) z + a_i z^2
        size_t i = 0;
        while (q[i] == 0) ++i;
        r.g_parts[i] = ring.z();
        r.h_part.add_term(Expv(nvars + 1, 0), ai(i));
        return r;
    }
    // x_i x_j with i <= j:
    //   x_i x_j = (x_i - a_i z) x_j + a_i x_j z, then the x_j z rule.
    size_t i = 0;
    while (q[i] == 0) ++i;
    size_t j = (q[i] == 2) ? i : i + 1;
    while (q[j] == 0) ++j;
    r.g_parts[i] = ring.x(static_cast<uint32_t>(j));
    r.g_parts[j] += ai(i) * ring.z();
    r.h_part.add_term(Expv(nvars + 1, 0), ai(i) * ai(j));
    return r;
}

namespace detail {

/// Splits off the canonical quadratic tail: w = q * rest.
inline void split_quadratic_tail(const Expv& w, Expv& q, Expv& rest) {
    q.assign(w.size(), 0);
    rest = w;
    uint32_t taken = 0;
    for (size_t slot = w.size(); slot-- > 0 && taken < 2;) {
        while (rest[slot] > 0 && taken < 2) {
            ++q[slot];
            --rest[slot];
            ++taken;
        }
    }
}

}  // namespace detail

/// Rewrites f (order >= 4, finitely supported, parameter-free) in the form
/// z^2 h + sum (x_i - a_i z) g_i; deterministic in f.
template <class K>
A1Decomposition<K> decompose(const Series<K>& f, size_t nvars) {
    if (f.is_zero()) throw precondition_error("EMPTY_INPUT", "cannot decompose the zero series");
    if (f.nvars() != nvars) throw config_error("variable count does not match the series");
    if (f.order() < 4)
        throw precondition_error("ORDER_TOO_LOW", "decomposition requires order at least 4, got order " +
                                                      std::to_string(f.order()));
    SeriesRing<K> ring(static_cast<uint32_t>(nvars), static_cast<uint32_t>(nvars));
    A1Decomposition<K> dec{f, ring.zero(), std::vector<Series<K>>(nvars, ring.zero())};

    Expv q, rest;
    for (const auto& [w, c] : f.terms()) {
        detail::split_quadratic_tail(w, q, rest);
        QuadraticRewrite<K> rw = rewrite_quadratic<K>(q, nvars);
        Series<K> residual = ring.monomial(rest, K(1)) * c;
        dec.h += residual * rw.h_part;
        for (size_t i = 0; i < nvars; ++i)
            if (!rw.g_parts[i].is_zero()) dec.g[i] += residual * rw.g_parts[i];
    }
    return dec;
}

/// Expands z^2 h + sum (x_i - a_i z) g_i, parameters as indeterminates.
/// This is the independent check that a decomposition is valid.
template <class K>
Series<K> recompose(const A1Decomposition<K>& dec) {
    size_t n = dec.nvars();
    SeriesRing<K> ring(static_cast<uint32_t>(n), static_cast<uint32_t>(n));
    Series<K> acc = ring.z() * ring.z() * dec.h;
    for (size_t i = 0; i < n; ++i)
        acc += ring.var_minus_param_z(static_cast<uint32_t>(i)) * dec.g[i];
    return acc;
}

/// Recomposition plus the order bounds of the shape.
template <class K>
bool is_valid_decomposition(const A1Decomposition<K>& dec) {
    if (dec.h.order() < 2) return false;
    for (const auto& gi : dec.g)
        if (gi.order() < 3) return false;
    return recompose(dec) == dec.f;
}

}  // namespace mfwild
