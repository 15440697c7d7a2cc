// Exact linear-algebra oracles: hom spaces of commuting tuples, hom spaces
// of matrix factorizations modulo a truncation ideal, and the structure
// certifications for their constant strands (block lower triangularity,
// repeated diagonal block, intertwining). Isomorphism and indecomposability
// oracles sit on top of the hom solvers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfwild/linalg.hpp"
#include "mfwild/matfac.hpp"
#include "mfwild/rng.hpp"
#include "mfwild/tuples.hpp"

namespace mfwild {

/// Basis of the space of tuple homomorphisms A -> B.
template <class K>
struct HomBasis {
    std::vector<Matrix<K>> elems;
    size_t dim() const { return elems.size(); }
};

/// Solves the simultaneous Sylvester-type conditions U A_i = B_i U.
template <class K>
HomBasis<K> tuple_hom_basis(const CommutingTuple<K>& a, const CommutingTuple<K>& b) {
    if (a.arity() != b.arity()) throw precondition_error("ARITY", "tuple arities differ");
    const size_t ma = a.dim(), mb = b.dim();
    const size_t ncols = mb * ma;
    auto idx = [&](size_t i, size_t j) { return i * ma + j; };
    std::vector<std::vector<K>> rows;
    rows.reserve(a.arity() * ncols);
    for (size_t k = 0; k < a.arity(); ++k) {
        const Matrix<K>& ak = a.mat(k);
        const Matrix<K>& bk = b.mat(k);
        for (size_t i = 0; i < mb; ++i)
            for (size_t j = 0; j < ma; ++j) {
                std::vector<K> row(ncols, K(0));
                for (size_t l = 0; l < ma; ++l) row[idx(i, l)] += ak(l, j);
                for (size_t l = 0; l < mb; ++l) row[idx(l, j)] -= bk(i, l);
                bool zero = true;
                for (const K& c : row)
                    if (!c.is_zero()) {
                        zero = false;
                        break;
                    }
                if (!zero) rows.push_back(std::move(row));
            }
    }
    HomBasis<K> basis;
    for (auto& v : nullspace_basis(std::move(rows), ncols)) {
        Matrix<K> u(mb, ma);
        for (size_t i = 0; i < mb; ++i)
            for (size_t j = 0; j < ma; ++j) u(i, j) = v[idx(i, j)];
        basis.elems.push_back(std::move(u));
    }
    return basis;
}

template <class K>
Matrix<K> linear_combination(const std::vector<Matrix<K>>& basis, const std::vector<K>& coeffs) {
    Matrix<K> acc(basis.at(0).rows(), basis.at(0).cols());
    for (size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        acc += coeffs[i] * basis[i];
    }
    return acc;
}

/// All monomials in x_1..x_nvars, z of total degree < bound, ordered by
/// degree then lexicographically. This is the grading used by the truncated
/// hom solver: the degree-d strand of the equations only involves strands of
/// S, T of degree <= d.
inline std::vector<Expv> monomials_below(uint32_t nvars, uint32_t bound) {
    std::vector<Expv> out;
    Expv cur(nvars + 1, 0);
    for (uint32_t deg = 0; deg < bound; ++deg) {
        // enumerate compositions of deg into nvars+1 slots
        std::vector<Expv> level;
        Expv e(nvars + 1, 0);
        auto rec = [&](auto&& self, size_t slot, uint32_t rem) -> void {
            if (slot == nvars) {
                e[slot] = rem;
                level.push_back(e);
                return;
            }
            for (uint32_t v = 0; v <= rem; ++v) {
                e[slot] = v;
                self(self, slot + 1, rem - v);
            }
            e[slot] = 0;
        };
        rec(rec, 0, deg);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Solution space of the morphism equations S Phi = Phi' T, T Psi = Psi' S
/// modulo all strands of degree >= trunc, as raw coefficient vectors over
/// the strand unknowns. Strands are materialized on demand.
template <class K>
class MfHomBasis {
public:
    size_t dim() const { return vecs.size(); }

    /// Strand {mono} of basis element `idx`; side 0 = S, 1 = T.
    Matrix<K> strand_of(size_t idx, int side, const Expv& mono) const {
        auto it = std::find(monomials.begin(), monomials.end(), mono);
        if (it == monomials.end()) throw config_error("strand outside the solved range");
        size_t u = static_cast<size_t>(it - monomials.begin());
        Matrix<K> m(s_tgt, s_src);
        const std::vector<K>& v = vecs[idx];
        for (size_t i = 0; i < s_tgt; ++i)
            for (size_t j = 0; j < s_src; ++j) m(i, j) = v[offset(side, u, i, j)];
        return m;
    }

    /// Materializes basis element `idx` as a truncated series pair.
    MFHom<K> to_hom(size_t idx) const {
        SeriesRing<K> ring(nvars, 0, trunc);
        MFHom<K> hom{Matrix<Series<K>>(s_tgt, s_src, ring.zero()),
                     Matrix<Series<K>>(s_tgt, s_src, ring.zero()), trunc};
        const std::vector<K>& v = vecs[idx];
        for (size_t u = 0; u < monomials.size(); ++u)
            for (size_t i = 0; i < s_tgt; ++i)
                for (size_t j = 0; j < s_src; ++j) {
                    const K& cs = v[offset(0, u, i, j)];
                    if (!cs.is_zero()) hom.S(i, j).add_term(monomials[u], cs);
                    const K& ct = v[offset(1, u, i, j)];
                    if (!ct.is_zero()) hom.T(i, j).add_term(monomials[u], ct);
                }
        return hom;
    }

    size_t offset(int side, size_t mono_idx, size_t i, size_t j) const {
        size_t base = static_cast<size_t>(side) * monomials.size() * s_tgt * s_src;
        return base + mono_idx * s_tgt * s_src + i * s_src + j;
    }

    size_t s_src = 0, s_tgt = 0;
    uint32_t nvars = 0;
    uint32_t trunc = 0;
    std::vector<Expv> monomials;
    std::vector<std::vector<K>> vecs;
};

/// Assembles and solves the truncated morphism equations strand by strand.
/// Unknowns and equations are ordered by degree, so the system is block
/// lower triangular along the grading.
template <class K>
MfHomBasis<K> mf_hom_basis_mod(const MatrixFactorization<K>& src, const MatrixFactorization<K>& tgt,
                               uint32_t trunc) {
    if (trunc < 1) throw precondition_error("TRUNC", "truncation degree must be at least 1");
    if (!(src.f == tgt.f)) throw config_error("hom solving needs factorizations of the same f");
    MfHomBasis<K> basis;
    basis.s_src = src.size();
    basis.s_tgt = tgt.size();
    basis.nvars = std::max(src.phi(0, 0).nvars(), src.f.nvars());
    basis.trunc = trunc;
    basis.monomials = monomials_below(basis.nvars, trunc);
    const auto& monos = basis.monomials;
    const size_t s = basis.s_src, s2 = basis.s_tgt;
    const size_t ncols = 2 * monos.size() * s2 * s;

    // strand tables for the four matrices
    std::vector<Matrix<K>> phi_s, phi_t, psi_s, psi_t;
    phi_s.reserve(monos.size());
    for (const Expv& v : monos) {
        phi_s.push_back(scalar_strand(src.phi, v));
        psi_s.push_back(scalar_strand(src.psi, v));
        phi_t.push_back(scalar_strand(tgt.phi, v));
        psi_t.push_back(scalar_strand(tgt.psi, v));
    }

    std::vector<std::vector<K>> rows;
    std::vector<K> row;
    auto flush_row = [&]() {
        for (const K& c : row)
            if (!c.is_zero()) {
                rows.push_back(row);
                break;
            }
    };
    for (size_t wi = 0; wi < monos.size(); ++wi) {
        const Expv& w = monos[wi];
        // factorizations w = u * v over the solved monomial range
        std::vector<std::pair<size_t, size_t>> splits;
        for (size_t ui = 0; ui < monos.size(); ++ui)
            if (expv_divides(monos[ui], w)) {
                Expv v = expv_quot(w, monos[ui]);
                auto it = std::find(monos.begin(), monos.end(), v);
                splits.emplace_back(ui, static_cast<size_t>(it - monos.begin()));
            }
        // S phi - phi' T, strand w, entry (i, j)
        for (size_t i = 0; i < s2; ++i)
            for (size_t j = 0; j < s; ++j) {
                row.assign(ncols, K(0));
                for (auto [ui, vi] : splits) {
                    for (size_t k = 0; k < s; ++k)
                        if (!phi_s[vi](k, j).is_zero()) row[basis.offset(0, ui, i, k)] += phi_s[vi](k, j);
                    for (size_t k = 0; k < s2; ++k)
                        if (!phi_t[vi](i, k).is_zero()) row[basis.offset(1, ui, k, j)] -= phi_t[vi](i, k);
                }
                flush_row();
            }
        // T psi - psi' S, strand w, entry (i, j)
        for (size_t i = 0; i < s2; ++i)
            for (size_t j = 0; j < s; ++j) {
                row.assign(ncols, K(0));
                for (auto [ui, vi] : splits) {
                    for (size_t k = 0; k < s; ++k)
                        if (!psi_s[vi](k, j).is_zero()) row[basis.offset(1, ui, i, k)] += psi_s[vi](k, j);
                    for (size_t k = 0; k < s2; ++k)
                        if (!psi_t[vi](i, k).is_zero()) row[basis.offset(0, ui, k, j)] -= psi_t[vi](i, k);
                }
                flush_row();
            }
    }
    basis.vecs = nullspace_basis(std::move(rows), ncols);
    return basis;
}

// ---- structure certifications ----

struct CertReport {
    bool ok = true;
    std::string violation;       // empty when ok
    size_t block_row = 0, block_col = 0;
};

/// Reduced inflated matrices at a given level of the doubling recursion.
/// Modulo the square of the maximal ideal only the pencil blocks
/// x_j I - z A_j survive, so the bar matrices depend on the tuple alone.
template <class K>
std::pair<Matrix<Series<K>>, Matrix<Series<K>>> bar_level_matrices(const CommutingTuple<K>& tuple,
                                                                   size_t level) {
    if (level > tuple.arity()) throw precondition_error("ARITY", "level exceeds tuple arity");
    const size_t m = tuple.dim();
    SeriesRing<K> ring(static_cast<uint32_t>(tuple.arity()), 0, 2);
    Matrix<Series<K>> phi(m, m, ring.zero()), psi(m, m, ring.zero());
    for (size_t j = 0; j < level; ++j) {
        const size_t s = phi.rows();
        // pencil block x_{j+1} I_m - z A_{j+1}, replicated down the diagonal
        Matrix<Series<K>> pencil(m, m, ring.zero());
        Expv xj(tuple.arity() + 1, 0), ze(tuple.arity() + 1, 0);
        xj[j] = 1;
        ze.back() = 1;
        for (size_t a = 0; a < m; ++a) {
            pencil(a, a).add_term(xj, K(1));
            for (size_t b = 0; b < m; ++b) {
                const K& c = tuple.mat(j)(a, b);
                if (!c.is_zero()) pencil(a, b).add_term(ze, -c);
            }
        }
        Matrix<Series<K>> big(s, s, ring.zero());
        for (size_t blk = 0; blk < s / m; ++blk) big.set_block(blk * m, blk * m, pencil);

        Matrix<Series<K>> nphi(2 * s, 2 * s, ring.zero()), npsi(2 * s, 2 * s, ring.zero());
        nphi.set_block(0, 0, phi);
        nphi.set_block(s, 0, big);
        nphi.set_block(s, s, psi);
        npsi.set_block(0, 0, psi);
        npsi.set_block(s, 0, -big);
        npsi.set_block(s, s, phi);
        phi = std::move(nphi);
        psi = std::move(npsi);
    }
    return {phi, psi};
}

/// Basis of pairs (C, D) of scalar matrices satisfying
/// C bar(Phi) = bar(Phi') D and D bar(Psi) = bar(Psi') C at the given level.
template <class K>
std::vector<std::pair<Matrix<K>, Matrix<K>>> bar_compatible_pairs(const CommutingTuple<K>& src,
                                                                  const CommutingTuple<K>& tgt,
                                                                  size_t level) {
    auto [phi_s, psi_s] = bar_level_matrices(src, level);
    auto [phi_t, psi_t] = bar_level_matrices(tgt, level);
    const size_t s = phi_s.rows(), s2 = phi_t.rows();
    const size_t half = s2 * s;
    const size_t ncols = 2 * half;  // C then D
    auto cidx = [&](size_t i, size_t j) { return i * s + j; };

    std::vector<Expv> monos = monomials_below(static_cast<uint32_t>(src.arity()), 2);
    std::vector<std::vector<K>> rows;
    std::vector<K> row;
    for (const Expv& w : monos) {
        Matrix<K> fs = scalar_strand(phi_s, w), ft = scalar_strand(phi_t, w);
        Matrix<K> gs = scalar_strand(psi_s, w), gt = scalar_strand(psi_t, w);
        for (size_t i = 0; i < s2; ++i)
            for (size_t j = 0; j < s; ++j) {
                row.assign(ncols, K(0));
                bool nonzero = false;
                for (size_t k = 0; k < s; ++k)
                    if (!fs(k, j).is_zero()) {
                        row[cidx(i, k)] += fs(k, j);
                        nonzero = true;
                    }
                for (size_t k = 0; k < s2; ++k)
                    if (!ft(i, k).is_zero()) {
                        row[half + cidx(k, j)] -= ft(i, k);
                        nonzero = true;
                    }
                if (nonzero) rows.push_back(row);
                row.assign(ncols, K(0));
                nonzero = false;
                for (size_t k = 0; k < s; ++k)
                    if (!gs(k, j).is_zero()) {
                        row[half + cidx(i, k)] += gs(k, j);
                        nonzero = true;
                    }
                for (size_t k = 0; k < s2; ++k)
                    if (!gt(i, k).is_zero()) {
                        row[cidx(k, j)] -= gt(i, k);
                        nonzero = true;
                    }
                if (nonzero) rows.push_back(row);
            }
    }
    std::vector<std::pair<Matrix<K>, Matrix<K>>> out;
    for (auto& v : nullspace_basis(std::move(rows), ncols)) {
        Matrix<K> c(s2, s), d(s2, s);
        for (size_t i = 0; i < s2; ++i)
            for (size_t j = 0; j < s; ++j) {
                c(i, j) = v[cidx(i, j)];
                d(i, j) = v[half + cidx(i, j)];
            }
        out.emplace_back(std::move(c), std::move(d));
    }
    return out;
}

/// Items certified for solutions (C, D) of the reduced-matrix equations:
///  (i)   C and D are block lower triangular in m x m blocks,
///  (ii)  every diagonal block lies in {C_11, D_11},
///  (iii) C_last A_j = A'_j D_[last - 2^(j-1)] for j = 1..level.
template <class K>
CertReport certify_lower_triangular(const Matrix<K>& c, const Matrix<K>& d, size_t level,
                                    const CommutingTuple<K>& src, const CommutingTuple<K>& tgt) {
    CertReport rep;
    const size_t ma = src.dim(), mb = tgt.dim();
    const size_t grid = size_t{1} << level;
    if (c.rows() != mb * grid || c.cols() != ma * grid || d.rows() != mb * grid || d.cols() != ma * grid)
        throw config_error("certify_lower_triangular: size mismatch with level");
    auto blk = [&](const Matrix<K>& m, size_t bi, size_t bj) { return m.block(bi * mb, bj * ma, mb, ma); };

    for (size_t i = 0; i < grid; ++i)
        for (size_t j = i + 1; j < grid; ++j) {
            if (!blk(c, i, j).is_zero_matrix()) {
                rep = {false, "C has a nonzero block above the diagonal", i, j};
                return rep;
            }
            if (!blk(d, i, j).is_zero_matrix()) {
                rep = {false, "D has a nonzero block above the diagonal", i, j};
                return rep;
            }
        }
    Matrix<K> c11 = blk(c, 0, 0), d11 = blk(d, 0, 0);
    for (size_t i = 0; i < grid; ++i) {
        Matrix<K> ci = blk(c, i, i), di = blk(d, i, i);
        if (ci != c11 && ci != d11) {
            rep = {false, "diagonal block of C outside {C11, D11}", i, i};
            return rep;
        }
        if (di != c11 && di != d11) {
            rep = {false, "diagonal block of D outside {C11, D11}", i, i};
            return rep;
        }
    }
    for (size_t j = 1; j <= level; ++j) {
        size_t idx = grid - (size_t{1} << (j - 1)) - 1;  // 0-based
        Matrix<K> lhs = blk(c, grid - 1, grid - 1) * src.mat(j - 1);
        Matrix<K> rhs = tgt.mat(j - 1) * blk(d, idx, idx);
        if (lhs != rhs) {
            rep = {false, "pencil intertwining fails at j=" + std::to_string(j), grid - 1, idx};
            return rep;
        }
    }
    return rep;
}

/// Result of extracting the repeated diagonal block of a morphism's constant
/// strand.
template <class K>
struct DiagonalExtraction {
    bool ok = true;
    Matrix<K> u;
    std::string violation;
    size_t block_row = 0, block_col = 0;
};

/// Certifies the constant strands S{1}, T{1} of a morphism between inflated
/// factorizations: block lower triangular, one repeated diagonal block U on
/// both, and U intertwines the tuples. Returns U.
template <class K>
DiagonalExtraction<K> certify_constant_diagonal(const Matrix<K>& s1, const Matrix<K>& t1,
                                                const CommutingTuple<K>& src,
                                                const CommutingTuple<K>& tgt) {
    DiagonalExtraction<K> rep;
    const size_t ma = src.dim(), mb = tgt.dim();
    const size_t grid = size_t{1} << src.arity();
    if (src.arity() != tgt.arity()) throw precondition_error("ARITY", "tuple arities differ");
    if (s1.rows() != mb * grid || s1.cols() != ma * grid || t1.rows() != mb * grid || t1.cols() != ma * grid)
        throw config_error("certify_constant_diagonal: strand size mismatch");
    auto blk = [&](const Matrix<K>& m, size_t bi, size_t bj) { return m.block(bi * mb, bj * ma, mb, ma); };

    rep.u = blk(s1, 0, 0);
    const Matrix<K>* mats[2] = {&s1, &t1};
    const char* names[2] = {"S{1}", "T{1}"};
    for (int which = 0; which < 2; ++which) {
        for (size_t i = 0; i < grid; ++i) {
            for (size_t j = i + 1; j < grid; ++j)
                if (!blk(*mats[which], i, j).is_zero_matrix()) {
                    rep.ok = false;
                    rep.violation = std::string(names[which]) + " has a nonzero block above the diagonal";
                    rep.block_row = i;
                    rep.block_col = j;
                    return rep;
                }
            if (blk(*mats[which], i, i) != rep.u) {
                rep.ok = false;
                rep.violation = std::string(names[which]) + " diagonal block differs from U";
                rep.block_row = i;
                rep.block_col = i;
                return rep;
            }
        }
    }
    if (!is_tuple_hom(src, tgt, rep.u)) {
        rep.ok = false;
        rep.violation = "extracted U does not intertwine the tuples";
    }
    return rep;
}

/// Independent certification path: the four quadratic strand equations of
/// the (1,1) block of S Phi = Phi' T, checked directly on a solved hom.
/// Requires the hom to be solved at truncation >= 3.
template <class K>
bool quadratic_strand_equations_hold(const MfHomBasis<K>& basis, size_t idx, const CommutingTuple<K>& src,
                                     const CommutingTuple<K>& tgt) {
    if (basis.trunc < 3)
        throw precondition_error("TRUNC", "quadratic strand equations need truncation at least 3");
    const size_t ma = src.dim(), mb = tgt.dim();
    const size_t n = src.arity();
    const uint32_t nv = basis.nvars;
    auto blk = [&](const Matrix<K>& m, size_t bj) { return m.block(0, bj * ma, mb, ma); };
    auto mono = [&](int xi) {  // xi = -1 means z, -2 means 1
        Expv e(nv + 1, 0);
        if (xi >= 0) e[static_cast<size_t>(xi)] = 1;
        if (xi == -1) e.back() = 1;
        return e;
    };
    std::vector<Matrix<K>> s_x(n), s_z_blocks(n);
    Matrix<K> s_one = basis.strand_of(idx, 0, mono(-2));
    Matrix<K> t_one = basis.strand_of(idx, 1, mono(-2));
    Matrix<K> s_z = basis.strand_of(idx, 0, mono(-1));
    std::vector<Matrix<K>> s_xi;
    for (size_t i = 0; i < n; ++i) s_xi.push_back(basis.strand_of(idx, 0, mono(static_cast<int>(i))));

    // {z^2}: S11{1} - sum_i S_{1,2^(i-1)+1}{z} A_i = T11{1}
    Matrix<K> acc = blk(s_one, 0);
    for (size_t i = 0; i < n; ++i) acc -= blk(s_z, size_t{1} << i) * src.mat(i);
    if (acc != blk(t_one, 0)) return false;
    // {x_i^2}: S_{1,2^(i-1)+1}{x_i} = 0
    for (size_t i = 0; i < n; ++i)
        if (!blk(s_xi[i], size_t{1} << i).is_zero_matrix()) return false;
    // {x_i z}: S_{1,2^(i-1)+1}{z} = sum_j S_{1,2^(j-1)+1}{x_i} A_j
    for (size_t i = 0; i < n; ++i) {
        Matrix<K> lhs = blk(s_z, size_t{1} << i);
        Matrix<K> rhs(mb, ma);
        for (size_t j = 0; j < n; ++j) rhs += blk(s_xi[i], size_t{1} << j) * src.mat(j);
        if (lhs != rhs) return false;
    }
    // {x_i x_j}: S_{1,2^(j-1)+1}{x_i} + S_{1,2^(i-1)+1}{x_j} = 0
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Matrix<K> sum = blk(s_xi[i], size_t{1} << j) + blk(s_xi[j], size_t{1} << i);
            if (!sum.is_zero_matrix()) return false;
        }
    return true;
}

// ---- isomorphism and indecomposability oracles ----

enum class Ternary { yes, no, unknown };

inline const char* ternary_name(Ternary t) {
    switch (t) {
        case Ternary::yes: return "yes";
        case Ternary::no: return "no";
        default: return "unknown";
    }
}

struct SearchPolicy {
    uint64_t seed = 1;
    int samples = 64;                       // randomized invertibility draws
    uint64_t exhaustive_limit = 1u << 20;   // max field^dim for exhaustive search
    size_t idempotent_dim_limit = 12;       // exhaustive idempotent bound
};

template <class K>
struct OracleResult {
    Ternary verdict = Ternary::unknown;
    std::optional<Matrix<K>> witness;
    std::string reason;
};

namespace detail {

inline std::optional<uint64_t> pow_within(uint64_t base, size_t exp, uint64_t limit) {
    uint64_t r = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

/// Odometer enumeration of coefficient vectors with entries 0..base-1.
template <class K, class F>
bool enumerate_combinations(size_t dim, uint64_t base, F&& visit) {
    std::vector<uint64_t> digits(dim, 0);
    while (true) {
        if (visit(digits)) return true;
        size_t pos = 0;
        while (pos < dim && ++digits[pos] == base) digits[pos++] = 0;
        if (pos == dim) return false;
    }
}

template <class K>
uint32_t field_modulus(const CommutingTuple<K>& t) {
    if constexpr (std::is_same_v<K, Fp>) {
        for (const auto& m : t.mats())
            for (size_t i = 0; i < m.rows(); ++i)
                for (size_t j = 0; j < m.cols(); ++j)
                    if (m(i, j).bound()) return m(i, j).modulus();
        return 0;
    } else {
        return 0;
    }
}

}  // namespace detail

/// Decides isomorphism of tuples where possible.
///  - "no" is certified: by a dimension obstruction (isomorphic tuples have
///    dim Hom(A,B) = dim End(A) = dim End(B)), or by exhausting a small
///    field's coefficient space.
///  - "yes" always comes with an invertible intertwiner as witness.
///  - randomized search failure alone yields "unknown", never "no".
template <class K>
OracleResult<K> is_isomorphic_tuples(const CommutingTuple<K>& a, const CommutingTuple<K>& b,
                                     const SearchPolicy& policy) {
    OracleResult<K> res;
    if (a.arity() != b.arity()) throw precondition_error("ARITY", "tuple arities differ");
    if (a.dim() != b.dim()) {
        res.verdict = Ternary::no;
        res.reason = "dimension mismatch";
        return res;
    }
    HomBasis<K> hom = tuple_hom_basis(a, b);
    if (hom.dim() == 0) {
        res.verdict = Ternary::no;
        res.reason = "hom space is zero";
        return res;
    }
    size_t end_a = tuple_hom_basis(a, a).dim();
    size_t end_b = tuple_hom_basis(b, b).dim();
    if (hom.dim() != end_a || hom.dim() != end_b) {
        res.verdict = Ternary::no;
        res.reason = "hom dimension obstruction: dim Hom = " + std::to_string(hom.dim()) +
                     ", dim End = " + std::to_string(end_a) + "/" + std::to_string(end_b);
        return res;
    }
    // exhaustive over a small prime field
    uint32_t p = detail::field_modulus(a);
    if (p != 0) {
        if (auto total = detail::pow_within(p, hom.dim(), policy.exhaustive_limit)) {
            (void)total;
            bool found = detail::enumerate_combinations<K>(hom.dim(), p, [&](const std::vector<uint64_t>& dig) {
                std::vector<K> coeffs;
                coeffs.reserve(dig.size());
                for (uint64_t d : dig) coeffs.push_back(Fp(static_cast<long long>(d), p));
                Matrix<K> u = linear_combination(hom.elems, coeffs);
                if (is_invertible(u)) {
                    res.witness = u;
                    return true;
                }
                return false;
            });
            res.verdict = found ? Ternary::yes : Ternary::no;
            res.reason = found ? "invertible intertwiner found (exhaustive)"
                               : "exhaustive search found no invertible intertwiner";
            return res;
        }
    }
    // randomized search
    SplitMix64 rng(policy.seed);
    K exemplar = K(0);
    if (p != 0) exemplar = K(0) + Fp(0, p);
    for (int t = 0; t < policy.samples; ++t) {
        std::vector<K> coeffs;
        coeffs.reserve(hom.dim());
        for (size_t i = 0; i < hom.dim(); ++i) coeffs.push_back(random_coefficient(rng, exemplar));
        Matrix<K> u = linear_combination(hom.elems, coeffs);
        if (is_invertible(u)) {
            res.verdict = Ternary::yes;
            res.witness = u;
            res.reason = "invertible intertwiner found (randomized)";
            return res;
        }
    }
    res.verdict = Ternary::unknown;
    res.reason = "randomized search found no invertible intertwiner";
    return res;
}

/// Searches the endomorphism algebra for a nontrivial idempotent.
///  - "no" (decomposable) always carries an idempotent witness.
///  - "yes" means the exhaustive search over {0,1}- and {0,1,2}-coordinate
///    combinations of the basis completed without finding one.
template <class K>
OracleResult<K> is_indecomposable(const CommutingTuple<K>& a, const SearchPolicy& policy) {
    OracleResult<K> res;
    HomBasis<K> end = tuple_hom_basis(a, a);
    Matrix<K> id = Matrix<K>::identity(a.dim(), K(1));
    if (end.dim() == 1) {
        res.verdict = Ternary::yes;
        res.reason = "endomorphism algebra is one-dimensional";
        return res;
    }
    if (end.dim() > policy.idempotent_dim_limit) {
        res.verdict = Ternary::unknown;
        res.reason = "endomorphism algebra too large for exhaustive idempotent search";
        return res;
    }
    for (uint64_t base : {uint64_t{2}, uint64_t{3}}) {
        bool found = detail::enumerate_combinations<K>(end.dim(), base, [&](const std::vector<uint64_t>& dig) {
            std::vector<K> coeffs;
            coeffs.reserve(dig.size());
            for (uint64_t d : dig) coeffs.push_back(K(static_cast<long long>(d)));
            Matrix<K> u = linear_combination(end.elems, coeffs);
            if (u.is_zero_matrix() || u == id) return false;
            if (u * u == u) {
                res.witness = u;
                return true;
            }
            return false;
        });
        if (found) {
            res.verdict = Ternary::no;
            res.reason = "nontrivial idempotent endomorphism found";
            return res;
        }
    }
    res.verdict = Ternary::yes;
    res.reason = "no nontrivial idempotent in the coordinate search";
    return res;
}

}  // namespace mfwild
