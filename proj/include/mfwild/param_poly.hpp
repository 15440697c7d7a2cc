// Polynomials in the parameters a_1..a_r with scalar coefficients. These act
// as the coefficient ring of the series layer: a series coefficient is a
// ParamPoly, which is a plain scalar when the parameter count is zero.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mfwild/errors.hpp"
#include "mfwild/fields.hpp"

namespace mfwild {

/// Exponent vector. Used both for parameter monomials (length = parameter
/// count) and geometric monomials (length = variable count + 1, z last).
using Expv = std::vector<uint32_t>;

inline uint32_t total_degree(const Expv& e) {
    uint32_t d = 0;
    for (uint32_t x : e) d += x;
    return d;
}

inline Expv expv_mul(const Expv& a, const Expv& b) {
    Expv r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Componentwise a <= b.
inline bool expv_divides(const Expv& a, const Expv& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expv expv_quot(const Expv& b, const Expv& a) {
    Expv r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

template <class K>
class ParamPoly {
public:
    ParamPoly() : nparams_(0) {}

    explicit ParamPoly(const K& c) : nparams_(0) {
        if (!c.is_zero()) terms_[Expv{}] = c;
    }

    /// The single parameter a_{i+1} (0-indexed).
    static ParamPoly param(size_t i, size_t nparams) {
        if (i >= nparams) throw config_error("parameter index out of range");
        ParamPoly p;
        p.nparams_ = static_cast<uint32_t>(nparams);
        Expv e(nparams, 0);
        e[i] = 1;
        p.terms_[e] = K(1);
        return p;
    }

    static ParamPoly monomial(const Expv& e, const K& c) {
        ParamPoly p;
        p.nparams_ = static_cast<uint32_t>(e.size());
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    uint32_t nparams() const { return nparams_; }
    const std::map<Expv, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    K constant_value() const {
        if (terms_.empty()) return K(0);
        if (!is_constant()) throw config_error("ParamPoly is not constant");
        return terms_.begin()->second;
    }

    uint32_t max_param_degree() const {
        uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    K coeff(const Expv& e) const {
        Expv key = pad_key(e, nparams_);
        auto it = terms_.find(key);
        return it == terms_.end() ? K(0) : it->second;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = widen(a, std::max(a.nparams_, b.nparams_));
        for (const auto& [e, c] : b.terms_) r.add_term(pad_key(e, r.nparams_), c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = widen(a, std::max(a.nparams_, b.nparams_));
        for (const auto& [e, c] : b.terms_) r.add_term(pad_key(e, r.nparams_), -c);
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        uint32_t np = std::max(a.nparams_, b.nparams_);
        ParamPoly r;
        r.nparams_ = np;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(expv_mul(pad_key(ea, np), pad_key(eb, np)), ca * cb);
        return r;
    }
    ParamPoly operator-() const {
        ParamPoly r;
        r.nparams_ = nparams_;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const K& s) { return a * ParamPoly(s); }
    friend ParamPoly operator*(const K& s, const ParamPoly& a) { return a * ParamPoly(s); }
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        uint32_t np = std::max(a.nparams_, b.nparams_);
        return widen(a, np).terms_ == widen(b, np).terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    /// Debug rendering, e.g. "3*a1*a2^2 - 1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*a" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    static Expv pad_key(const Expv& e, uint32_t np) {
        if (e.size() == np) return e;
        if (e.size() > np) throw config_error("parameter exponent vector too long");
        Expv r = e;
        r.resize(np, 0);
        return r;
    }
    static ParamPoly widen(const ParamPoly& p, uint32_t np) {
        if (p.nparams_ == np) return p;
        ParamPoly r;
        r.nparams_ = np;
        for (const auto& [e, c] : p.terms_) r.terms_[pad_key(e, np)] = c;
        return r;
    }
    void add_term(const Expv& e, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    uint32_t nparams_;
    std::map<Expv, K> terms_;
};

}  // namespace mfwild
