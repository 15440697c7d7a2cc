// Matrix factorizations (phi, psi) of a series f: phi psi = psi phi = f I.
// Includes the doubling construction that trades f for f + uv at twice the
// size, the chain of factorizations of x1 y1 + ... + xn yn it generates, and
// the parameterized factorization built from an A1 decomposition.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfwild/a1_decomp.hpp"
#include "mfwild/matrix.hpp"
#include "mfwild/series.hpp"
#include "mfwild/tuples.hpp"

namespace mfwild {

template <class K>
struct MatrixFactorization {
    Matrix<Series<K>> phi, psi;
    Series<K> f;

    size_t size() const { return phi.rows(); }
};

template <class K>
struct VerifyReport {
    bool ok = true;
    std::string which;        // "phi*psi" or "psi*phi" when failing
    size_t row = 0, col = 0;  // first failing entry
    Series<K> residual;
};

/// Checks phi psi = psi phi = f I entrywise; failure is reported as data,
/// with the first offending entry and its residual as witness.
template <class K>
VerifyReport<K> verify_factorization(const MatrixFactorization<K>& mf) {
    VerifyReport<K> rep;
    if (mf.phi.rows() != mf.phi.cols() || mf.psi.rows() != mf.psi.cols() ||
        mf.phi.rows() != mf.psi.rows())
        throw config_error("factorization matrices must be square of equal size");
    const char* names[2] = {"phi*psi", "psi*phi"};
    for (int side = 0; side < 2; ++side) {
        Matrix<Series<K>> prod = side == 0 ? mf.phi * mf.psi : mf.psi * mf.phi;
        for (size_t i = 0; i < prod.rows(); ++i)
            for (size_t j = 0; j < prod.cols(); ++j) {
                Series<K> res = i == j ? prod(i, j) - mf.f : prod(i, j);
                if (!res.is_zero()) {
                    rep.ok = false;
                    rep.which = names[side];
                    rep.row = i;
                    rep.col = j;
                    rep.residual = res;
                    return rep;
                }
            }
    }
    return rep;
}

/// (phi, psi) of f becomes a factorization of f + uv of twice the size:
///   ([phi, -vI; uI, psi], [psi, vI; -uI, phi]).
/// u and v are x-variable indices that must not occur in f; the ambient
/// variable count grows to fit them if needed.
template <class K>
MatrixFactorization<K> knorrer_double(const MatrixFactorization<K>& mf, uint32_t u_var, uint32_t v_var) {
    if (u_var == v_var) throw precondition_error("VARIABLE_CLASH", "u and v must be distinct variables");
    if (mf.f.uses_var(u_var) || mf.f.uses_var(v_var))
        throw precondition_error("VARIABLE_CLASH", "doubling variable already occurs in f");
    uint32_t nv = std::max(mf.f.nvars(), std::max(u_var, v_var) + 1);
    SeriesRing<K> ring(nv, 0, mf.f.trunc());
    Series<K> u = ring.x(u_var), v = ring.x(v_var);

    const size_t s = mf.size();
    auto lift = [&](const Matrix<Series<K>>& m) {
        Matrix<Series<K>> r(m.rows(), m.cols(), ring.zero());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).extended(nv);
        return r;
    };
    Matrix<Series<K>> phi = lift(mf.phi), psi = lift(mf.psi);
    auto scaled_id = [&](const Series<K>& c) {
        Matrix<Series<K>> r(s, s, ring.zero());
        for (size_t i = 0; i < s; ++i) r(i, i) = c;
        return r;
    };

    MatrixFactorization<K> out;
    out.phi = Matrix<Series<K>>(2 * s, 2 * s, ring.zero());
    out.phi.set_block(0, 0, phi);
    out.phi.set_block(0, s, scaled_id(-v));
    out.phi.set_block(s, 0, scaled_id(u));
    out.phi.set_block(s, s, psi);
    out.psi = Matrix<Series<K>>(2 * s, 2 * s, ring.zero());
    out.psi.set_block(0, 0, psi);
    out.psi.set_block(0, s, scaled_id(v));
    out.psi.set_block(s, 0, scaled_id(-u));
    out.psi.set_block(s, s, phi);
    out.f = mf.f.extended(nv) + u * v;
    return out;
}

/// The factorization chain of f_n = x1 y1 + ... + xn yn, built by repeated
/// doubling from (x1, y1). Variables are laid out as x1, y1, x2, y2, ...;
/// the result has size 2^(n-1).
template <class K>
MatrixFactorization<K> a1_chain(size_t n) {
    if (n < 1) throw precondition_error("ARITY", "chain length must be at least 1");
    SeriesRing<K> ring(2, 0);
    MatrixFactorization<K> mf;
    mf.phi = Matrix<Series<K>>(1, 1, ring.x(0));
    mf.psi = Matrix<Series<K>>(1, 1, ring.x(1));
    mf.f = ring.x(0) * ring.x(1);
    for (size_t i = 1; i < n; ++i)
        mf = knorrer_double(mf, static_cast<uint32_t>(2 * i), static_cast<uint32_t>(2 * i + 1));
    return mf;
}

/// All levels of the parameterized factorization built on an A1
/// decomposition: level 0 is ([z^2], [h]) and each step doubles with the
/// blocks g_i I and (x_i - a_i z) I. Level i factorizes the partial sum
/// z^2 h + sum_{j<=i} (x_j - a_j z) g_j; the last level factorizes f itself.
template <class K>
std::vector<MatrixFactorization<K>> param_factorization_levels(const A1Decomposition<K>& dec) {
    if (!is_valid_decomposition(dec))
        throw precondition_error("INVALID_DECOMPOSITION", "decomposition does not recompose to f");
    const size_t n = dec.nvars();
    SeriesRing<K> ring(static_cast<uint32_t>(n), static_cast<uint32_t>(n));
    Series<K> z2 = ring.z() * ring.z();

    std::vector<MatrixFactorization<K>> levels;
    MatrixFactorization<K> cur;
    cur.phi = Matrix<Series<K>>(1, 1, z2);
    cur.psi = Matrix<Series<K>>(1, 1, dec.h);
    cur.f = z2 * dec.h;
    levels.push_back(cur);

    for (size_t i = 0; i < n; ++i) {
        const size_t s = cur.size();
        Series<K> pencil = ring.var_minus_param_z(static_cast<uint32_t>(i));
        auto scaled_id = [&](const Series<K>& c) {
            Matrix<Series<K>> r(s, s, ring.zero());
            for (size_t d = 0; d < s; ++d) r(d, d) = c;
            return r;
        };
        MatrixFactorization<K> next;
        next.phi = Matrix<Series<K>>(2 * s, 2 * s, ring.zero());
        next.phi.set_block(0, 0, cur.phi);
        next.phi.set_block(0, s, scaled_id(-dec.g[i]));
        next.phi.set_block(s, 0, scaled_id(pencil));
        next.phi.set_block(s, s, cur.psi);
        next.psi = Matrix<Series<K>>(2 * s, 2 * s, ring.zero());
        next.psi.set_block(0, 0, cur.psi);
        next.psi.set_block(0, s, scaled_id(dec.g[i]));
        next.psi.set_block(s, 0, scaled_id(-pencil));
        next.psi.set_block(s, s, cur.phi);
        next.f = cur.f + pencil * dec.g[i];
        levels.push_back(next);
        cur = next;
    }
    return levels;
}

/// Final level only; size 2^n, factorizes f with the parameters treated as
/// central commuting indeterminates.
template <class K>
MatrixFactorization<K> param_factorization(const A1Decomposition<K>& dec) {
    return param_factorization_levels(dec).back();
}

/// Morphism data between factorizations of the same f: a pair (S, T) with
/// S phi = phi' T and T psi = psi' S, exactly or modulo degree-trunc strands.
template <class K>
struct MFHom {
    Matrix<Series<K>> S, T;
    std::optional<uint32_t> trunc;
};

/// Re-substitution check of the defining equations. With trunc set, both
/// sides are compared modulo strands of that degree and above.
template <class K>
bool is_mf_hom(const MatrixFactorization<K>& src, const MatrixFactorization<K>& tgt, const MFHom<K>& hom) {
    auto clip = [&](const Matrix<Series<K>>& m) {
        if (!hom.trunc) return m;
        Matrix<Series<K>> r(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).truncated(*hom.trunc);
        return r;
    };
    Matrix<Series<K>> lhs1 = clip(hom.S * src.phi), rhs1 = clip(tgt.phi * hom.T);
    if (lhs1 != rhs1) return false;
    Matrix<Series<K>> lhs2 = clip(hom.T * src.psi), rhs2 = clip(tgt.psi * hom.S);
    return lhs2 == rhs2;
}

}  // namespace mfwild
