// Commuting matrix tuples (finite-length modules over the parameter
// polynomial ring, presented by the action matrices in a chosen basis),
// their homomorphisms, and inflation: substituting the tuple for the
// parameters of a series matrix.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mfwild/linalg.hpp"
#include "mfwild/matrix.hpp"
#include "mfwild/series.hpp"

namespace mfwild {

template <class K>
class CommutingTuple {
public:
    /// Validates pairwise commutativity on construction.
    explicit CommutingTuple(std::vector<Matrix<K>> mats) : mats_(std::move(mats)) {
        if (mats_.empty()) throw precondition_error("ARITY", "tuple must contain at least one matrix");
        dim_ = mats_[0].rows();
        for (const auto& a : mats_)
            if (a.rows() != dim_ || a.cols() != dim_)
                throw precondition_error("ARITY", "tuple matrices must be square of equal size");
        if (auto w = commutation_witness()) {
            throw precondition_error("NONCOMMUTING", "tuple matrices " + std::to_string(w->first + 1) +
                                                         " and " + std::to_string(w->second + 1) +
                                                         " do not commute");
        }
    }

    size_t arity() const { return mats_.size(); }
    size_t dim() const { return dim_; }
    const Matrix<K>& mat(size_t i) const { return mats_[i]; }
    const std::vector<Matrix<K>>& mats() const { return mats_; }

    /// First (i, j) with A_i A_j != A_j A_i, if any.
    std::optional<std::pair<size_t, size_t>> commutation_witness() const {
        for (size_t i = 0; i < mats_.size(); ++i)
            for (size_t j = i + 1; j < mats_.size(); ++j)
                if (mats_[i] * mats_[j] != mats_[j] * mats_[i]) return std::make_pair(i, j);
        return std::nullopt;
    }

private:
    std::vector<Matrix<K>> mats_;
    size_t dim_;
};

/// Homomorphism of tuples: U with U A_i = A'_i U for all i.
template <class K>
struct TupleHom {
    Matrix<K> mat;  // target dim x source dim
};

template <class K>
bool is_tuple_hom(const CommutingTuple<K>& src, const CommutingTuple<K>& tgt, const Matrix<K>& u) {
    if (src.arity() != tgt.arity()) return false;
    if (u.rows() != tgt.dim() || u.cols() != src.dim()) return false;
    for (size_t i = 0; i < src.arity(); ++i)
        if (u * src.mat(i) != tgt.mat(i) * u) return false;
    return true;
}

/// Substitution homomorphism: parameters become the tuple's matrices,
/// constants become scalar multiples of the identity.
template <class K>
Matrix<K> eval_params(const ParamPoly<K>& p, const CommutingTuple<K>& tuple) {
    if (p.nparams() > tuple.arity())
        throw precondition_error("ARITY", "polynomial uses " + std::to_string(p.nparams()) +
                                              " parameters but tuple has arity " +
                                              std::to_string(tuple.arity()));
    const size_t m = tuple.dim();
    // power cache per parameter, filled on demand
    std::vector<std::vector<Matrix<K>>> pow(p.nparams());
    for (size_t i = 0; i < p.nparams(); ++i) pow[i].push_back(Matrix<K>::identity(m, K(1)));
    Matrix<K> acc(m, m);
    for (const auto& [e, c] : p.terms()) {
        Matrix<K> term = Matrix<K>::identity(m, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            while (pow[i].size() <= e[i]) pow[i].push_back(pow[i].back() * tuple.mat(i));
            term = term * pow[i][e[i]];
        }
        acc += term;
    }
    return acc;
}

/// Inflates one series: every coefficient polynomial is evaluated at the
/// tuple, turning the series into an m x m matrix of parameter-free series.
template <class K>
Matrix<Series<K>> inflate_series(const Series<K>& s, const CommutingTuple<K>& tuple) {
    const size_t m = tuple.dim();
    SeriesRing<K> ring(s.nvars(), 0, s.trunc());
    Matrix<Series<K>> out(m, m, ring.zero());
    for (const auto& [mono, coeff] : s.terms()) {
        Matrix<K> c = eval_params(coeff, tuple);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b)
                if (!c(a, b).is_zero()) out(a, b).add_term(mono, c(a, b));
    }
    return out;
}

/// Blockwise inflation of a whole matrix; dimensions scale by the tuple's.
template <class K>
Matrix<Series<K>> inflate_matrix(const Matrix<Series<K>>& p, const CommutingTuple<K>& tuple) {
    const size_t m = tuple.dim();
    Matrix<Series<K>> out(p.rows() * m, p.cols() * m);
    for (size_t i = 0; i < p.rows(); ++i)
        for (size_t j = 0; j < p.cols(); ++j) out.set_block(i * m, j * m, inflate_series(p(i, j), tuple));
    return out;
}

// ---- series-matrix helpers ----

/// Entrywise coefficient extraction E{w}.
template <class K>
Matrix<ParamPoly<K>> strand(const Matrix<Series<K>>& e, const Expv& w) {
    Matrix<ParamPoly<K>> r(e.rows(), e.cols());
    for (size_t i = 0; i < e.rows(); ++i)
        for (size_t j = 0; j < e.cols(); ++j) r(i, j) = e(i, j).coeff(w);
    return r;
}

/// Strand of a parameter-free matrix, coerced to plain scalars.
template <class K>
Matrix<K> scalar_strand(const Matrix<Series<K>>& e, const Expv& w) {
    Matrix<K> r(e.rows(), e.cols());
    for (size_t i = 0; i < e.rows(); ++i)
        for (size_t j = 0; j < e.cols(); ++j) r(i, j) = e(i, j).coeff(w).constant_value();
    return r;
}

/// Entrywise image modulo the square of the maximal ideal.
template <class K>
Matrix<Series<K>> reduce_mod_msq(const Matrix<Series<K>>& e) {
    Matrix<Series<K>> r(e.rows(), e.cols());
    for (size_t i = 0; i < e.rows(); ++i)
        for (size_t j = 0; j < e.cols(); ++j) r(i, j) = reduce_mod_msq(e(i, j));
    return r;
}

/// Scalar matrix embedded as a constant series matrix.
template <class K>
Matrix<Series<K>> constant_matrix(const Matrix<K>& m, const SeriesRing<K>& ring) {
    Matrix<Series<K>> r(m.rows(), m.cols(), ring.zero());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) r(i, j) = ring.constant(m(i, j));
    return r;
}

}  // namespace mfwild
