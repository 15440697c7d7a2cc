// The embedding on objects and morphisms: a commuting tuple is sent to the
// inflation of the parameterized factorization, a tuple homomorphism U to
// the block-diagonal matrix with U down the diagonal (both components).
#pragma once

#include <cstddef>

#include "mfwild/linalg.hpp"
#include "mfwild/matfac.hpp"
#include "mfwild/tuples.hpp"

namespace mfwild {

/// F on objects: inflate the parameterized factorization of dec at the
/// tuple. Output size is dim(tuple) * 2^nvars.
template <class K>
MatrixFactorization<K> functor_object(const A1Decomposition<K>& dec, const CommutingTuple<K>& tuple) {
    if (tuple.arity() != dec.nvars())
        throw precondition_error("ARITY", "tuple arity " + std::to_string(tuple.arity()) +
                                              " does not match variable count " +
                                              std::to_string(dec.nvars()));
    MatrixFactorization<K> pf = param_factorization(dec);
    MatrixFactorization<K> out;
    out.phi = inflate_matrix(pf.phi, tuple);
    out.psi = inflate_matrix(pf.psi, tuple);
    out.f = dec.f;
    return out;
}

/// F on morphisms: 2^n diagonal copies of U, as a constant pair (S, T).
/// The identities S Phi = Phi' T and T Psi = Psi' S hold exactly.
template <class K>
MFHom<K> functor_morphism(const A1Decomposition<K>& dec, const CommutingTuple<K>& src,
                          const CommutingTuple<K>& tgt, const Matrix<K>& u) {
    if (!is_tuple_hom(src, tgt, u))
        throw precondition_error("INVALID_HOM", "matrix is not a homomorphism of the tuples");
    size_t copies = size_t{1} << dec.nvars();
    SeriesRing<K> ring(static_cast<uint32_t>(dec.nvars()), 0);
    Matrix<Series<K>> tilde = constant_matrix(block_diag_copies(u, copies), ring);
    return MFHom<K>{tilde, tilde, std::nullopt};
}

struct FunctorialityReport {
    bool composition_ok = false;  // F(U' U) = F(U') F(U)
    bool identity_ok = false;     // F(id) = id
    bool additivity_ok = false;   // F(U + V) = F(U) + F(V)
    bool rank_law_ok = false;     // rank F(U) = 2^n rank U
    size_t rank_u = 0, rank_image = 0;

    bool ok() const { return composition_ok && identity_ok && additivity_ok && rank_law_ok; }
};

/// Functor laws on a composable pair u: A -> B, u2: B -> C, all built from
/// the same decomposition. The rank law is the surrogate for exactness:
/// block-diagonal inflation scales kernel and image dimensions by 2^n.
template <class K>
FunctorialityReport check_functoriality(const A1Decomposition<K>& dec, const CommutingTuple<K>& a,
                                        const CommutingTuple<K>& b, const CommutingTuple<K>& c,
                                        const Matrix<K>& u, const Matrix<K>& u2) {
    FunctorialityReport rep;
    const size_t copies = size_t{1} << dec.nvars();

    MFHom<K> fu = functor_morphism(dec, a, b, u);
    MFHom<K> fu2 = functor_morphism(dec, b, c, u2);
    MFHom<K> fcomp = functor_morphism(dec, a, c, u2 * u);
    rep.composition_ok = (fcomp.S == fu2.S * fu.S) && (fcomp.T == fu2.T * fu.T);

    Matrix<K> id_a = Matrix<K>::identity(a.dim(), K(1));
    MFHom<K> fid = functor_morphism(dec, a, a, id_a);
    Matrix<K> big_id = block_diag_copies(id_a, copies);
    SeriesRing<K> ring(static_cast<uint32_t>(dec.nvars()), 0);
    rep.identity_ok = (fid.S == constant_matrix(big_id, ring));

    // additivity needs a second hom with the same endpoints; reuse u + u.
    MFHom<K> fsum = functor_morphism(dec, a, b, u + u);
    rep.additivity_ok = (fsum.S == fu.S + fu.S);

    rep.rank_u = mat_rank(u);
    rep.rank_image = mat_rank(block_diag_copies(u, copies));
    rep.rank_law_ok = rep.rank_image == copies * rep.rank_u;
    return rep;
}

}  // namespace mfwild
