// Finitely supported series in x_1..x_n, z with ParamPoly coefficients.
//
// Conventions used throughout the library:
//   - geometric exponent vectors have length nvars+1, with the z exponent in
//     the last slot;
//   - an optional truncation degree N means "known modulo terms of total
//     degree >= N": arithmetic drops such terms and coefficient reads at
//     degree >= N are errors rather than silent zeros;
//   - a default-constructed Series is the zero of an unspecified ring and
//     unifies with any configuration on contact.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "mfwild/param_poly.hpp"

namespace mfwild {

/// order() of the zero series.
inline constexpr uint32_t kInfiniteOrder = std::numeric_limits<uint32_t>::max();

template <class K>
class Series {
public:
    Series() : nvars_(0), trunc_(std::nullopt) {}

    Series(uint32_t nvars, std::optional<uint32_t> trunc) : nvars_(nvars), trunc_(trunc) {}

    uint32_t nvars() const { return nvars_; }
    std::optional<uint32_t> trunc() const { return trunc_; }
    const std::map<Expv, ParamPoly<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Series zero_like() const { return Series(nvars_, trunc_); }

    /// Minimum total degree of the support; kInfiniteOrder for zero.
    uint32_t order() const {
        uint32_t o = kInfiniteOrder;
        for (const auto& [e, c] : terms_) o = std::min(o, total_degree(e));
        return o;
    }

    uint32_t max_degree() const {
        uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    /// Adds c*mono, dropping terms at or beyond the truncation degree.
    void add_term(const Expv& mono, const ParamPoly<K>& c) {
        if (mono.size() != nvars_ + 1) throw config_error("monomial length does not match variable count");
        if (c.is_zero()) return;
        if (trunc_ && total_degree(mono) >= *trunc_) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_[mono] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_term(const Expv& mono, const K& c) { add_term(mono, ParamPoly<K>(c)); }

    /// Coefficient of a monomial. Reading at or beyond the truncation degree
    /// is an error: such coefficients are unknown, not zero.
    ParamPoly<K> coeff(const Expv& mono) const {
        if (trunc_ && total_degree(mono) >= *trunc_)
            throw config_error("coefficient of degree " + std::to_string(total_degree(mono)) +
                               " requested from a series truncated at " + std::to_string(*trunc_));
        if (terms_.empty()) return ParamPoly<K>();
        if (mono.size() != nvars_ + 1) throw config_error("monomial length does not match variable count");
        auto it = terms_.find(mono);
        return it == terms_.end() ? ParamPoly<K>() : it->second;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r = combined(a, b);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series r = combined(a, b);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c);
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series r = combined(a, b);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expv e = expv_mul(ea, eb);
                if (r.trunc_ && total_degree(e) >= *r.trunc_) continue;
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Series operator-() const {
        Series r(nvars_, trunc_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend Series operator*(const Series& a, const ParamPoly<K>& s) {
        Series r(a.nvars_, a.trunc_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
        return r;
    }
    friend Series operator*(const ParamPoly<K>& s, const Series& a) { return a * s; }
    friend Series operator*(const Series& a, const K& s) { return a * ParamPoly<K>(s); }
    friend Series operator*(const K& s, const Series& a) { return a * ParamPoly<K>(s); }
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Equality of stored supports. Truncation degrees are not compared.
    friend bool operator==(const Series& a, const Series& b) {
        if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
        if (a.nvars_ != b.nvars_) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Re-truncates to degree < n (and records the truncation).
    Series truncated(uint32_t n) const {
        Series r(nvars_, trunc_ ? std::min(*trunc_, n) : n);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) < n) r.terms_[e] = c;
        return r;
    }

    /// Embeds into a ring with more x variables; the z slot stays last.
    Series extended(uint32_t new_nvars) const {
        if (new_nvars < nvars_) throw config_error("cannot shrink variable count");
        if (new_nvars == nvars_) return *this;
        Series r(new_nvars, trunc_);
        for (const auto& [e, c] : terms_) {
            Expv ne(new_nvars + 1, 0);
            for (uint32_t i = 0; i < nvars_; ++i) ne[i] = e[i];
            ne[new_nvars] = e[nvars_];
            r.terms_[ne] = c;
        }
        return r;
    }

    /// True if variable x_{var} (0-indexed) occurs in the support.
    bool uses_var(uint32_t var) const {
        for (const auto& [e, c] : terms_)
            if (var < e.size() - 1 && e[var] != 0) return true;
        return false;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (size_t i = 0; i + 1 < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
            if (e.back() != 0) {
                os << "*z";
                if (e.back() > 1) os << "^" << e.back();
            }
        }
        return os.str();
    }

private:
    // Zero series adopt the other operand's ring; otherwise variable counts
    // must agree. Truncations combine by minimum.
    static Series combined(const Series& a, const Series& b) {
        uint32_t nv;
        if (a.terms_.empty())
            nv = b.nvars_;
        else if (b.terms_.empty())
            nv = a.nvars_;
        else if (a.nvars_ == b.nvars_)
            nv = a.nvars_;
        else
            throw config_error("series over different variable counts: " + std::to_string(a.nvars_) +
                               " vs " + std::to_string(b.nvars_));
        std::optional<uint32_t> tr;
        if (a.trunc_ && b.trunc_)
            tr = std::min(*a.trunc_, *b.trunc_);
        else
            tr = a.trunc_ ? a.trunc_ : b.trunc_;
        return Series(nv, tr);
    }

    uint32_t nvars_;
    std::optional<uint32_t> trunc_;
    std::map<Expv, ParamPoly<K>> terms_;
};

/// Drops every term of total degree >= 2; result carries truncation degree 2.
template <class K>
Series<K> reduce_mod_msq(const Series<K>& s) {
    return s.truncated(2);
}

/// Factory for series over a fixed configuration.
template <class K>
class SeriesRing {
public:
    SeriesRing(uint32_t nvars, uint32_t nparams = 0, std::optional<uint32_t> trunc = std::nullopt)
        : nvars_(nvars), nparams_(nparams), trunc_(trunc) {}

    uint32_t nvars() const { return nvars_; }
    uint32_t nparams() const { return nparams_; }
    std::optional<uint32_t> trunc() const { return trunc_; }

    Series<K> zero() const { return Series<K>(nvars_, trunc_); }

    Series<K> constant(const K& c) const {
        Series<K> s = zero();
        s.add_term(Expv(nvars_ + 1, 0), c);
        return s;
    }

    Series<K> one() const { return constant(K(1)); }

    /// x_{i+1} (0-indexed).
    Series<K> x(uint32_t i) const {
        if (i >= nvars_) throw config_error("variable index out of range");
        Series<K> s = zero();
        Expv e(nvars_ + 1, 0);
        e[i] = 1;
        s.add_term(e, K(1));
        return s;
    }

    Series<K> z() const {
        Series<K> s = zero();
        Expv e(nvars_ + 1, 0);
        e.back() = 1;
        s.add_term(e, K(1));
        return s;
    }

    Series<K> monomial(const Expv& e, const K& c) const {
        Series<K> s = zero();
        s.add_term(e, c);
        return s;
    }

    /// Constant series whose coefficient is the parameter a_{i+1}.
    Series<K> param(uint32_t i) const {
        Series<K> s = zero();
        s.add_term(Expv(nvars_ + 1, 0), ParamPoly<K>::param(i, nparams_));
        return s;
    }

    /// The pencil x_{i+1} - a_{i+1} z.
    Series<K> var_minus_param_z(uint32_t i) const {
        Series<K> s = x(i);
        Expv e(nvars_ + 1, 0);
        e.back() = 1;
        s.add_term(e, -ParamPoly<K>::param(i, nparams_));
        return s;
    }

private:
    uint32_t nvars_, nparams_;
    std::optional<uint32_t> trunc_;
};

}  // namespace mfwild
