// Exact scalar arithmetic: prime fields F_p (odd p, runtime modulus) and
// arbitrary-precision rationals. Everything downstream is templated on the
// scalar type, so both fields share one code path.
#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfwild/errors.hpp"
#include "mfwild/rng.hpp"

namespace mfwild {

inline bool is_odd_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Element of F_p with the modulus carried per value.
///
/// A value constructed from a bare integer is an *unbound literal*: it has no
/// modulus yet and adopts one on first contact with a bound element. Library
/// code builds its structural constants (0, ±1, small integers) as literals,
/// so the user's input data decides the field. Mixing two distinct bound
/// moduli throws.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v) : v_(v), p_(0) {}  // NOLINT: implicit by design (literals)

    Fp(long long v, uint32_t p) : p_(p) {
        if (!is_odd_prime(p)) throw config_error("Fp modulus must be an odd prime, got " + std::to_string(p));
        v_ = canon(v, p);
    }

    static Fp zero(uint32_t p) { return Fp(0, p); }
    static Fp one(uint32_t p) { return Fp(1, p); }

    uint32_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }
    bool is_zero() const { return v_ == 0; }

    /// Canonical representative: in [0, p) once bound, raw literal otherwise.
    long long value() const { return v_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        return p ? from_canon(add_mod(x, y, p), p) : Fp(x + y);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        return p ? from_canon(add_mod(x, y == 0 ? 0 : p - y, p), p) : Fp(x - y);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        if (!p) return Fp(x * y);
        return from_canon(static_cast<long long>((static_cast<unsigned long long>(x) * static_cast<unsigned long long>(y)) % p), p);
    }
    Fp operator-() const {
        if (!p_) return Fp(-v_);
        return from_canon(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const {
        if (is_zero()) throw config_error("division by zero in F_p");
        if (!p_) {
            if (v_ == 1 || v_ == -1) return *this;
            throw config_error("cannot invert unbound literal " + std::to_string(v_));
        }
        // extended Euclid on (v, p)
        long long t = 0, newt = 1, r = p_, newr = v_;
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        return from_canon(canon(t, p_), p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y, p] = unify(a, b);
        return p ? x == y : x == y;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static long long canon(long long v, uint32_t p) {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    }
    static Fp from_canon(long long v, uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    struct Unified {
        long long x, y;
        uint32_t p;
    };
    static Unified unify(const Fp& a, const Fp& b) {
        if (a.p_ == b.p_) return {a.v_, b.v_, a.p_};
        if (a.p_ != 0 && b.p_ != 0)
            throw config_error("mixing F_" + std::to_string(a.p_) + " with F_" + std::to_string(b.p_));
        uint32_t p = a.p_ ? a.p_ : b.p_;
        return {canon(a.v_, p), canon(b.v_, p), p};
    }
    static long long add_mod(long long x, long long y, uint32_t p) {
        long long s = x + y;
        return s >= static_cast<long long>(p) ? s - p : s;
    }

    long long v_;
    uint32_t p_;
};

/// Exact rational scalar.
class Rat {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rat() : v_(0) {}
    Rat(long long v) : v_(v) {}  // NOLINT: implicit by design (literals)
    Rat(long long num, long long den) : v_(rep(num) / den) {}
    explicit Rat(rep v) : v_(std::move(v)) {}

    bool is_zero() const { return v_ == 0; }
    const rep& value() const { return v_; }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        v_ *= o.v_;
        return *this;
    }
    Rat inv() const {
        if (is_zero()) throw config_error("division by zero in Q");
        return Rat(1 / v_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.str(); }

private:
    rep v_;
};

/// Uniform draw compatible with `exemplar`'s field. Unbound exemplars (and
/// rationals) draw small integers, which keeps rational corpora cheap.
inline Fp random_coefficient(SplitMix64& rng, const Fp& exemplar) {
    if (exemplar.bound())
        return Fp(static_cast<long long>(rng.below(exemplar.modulus())), exemplar.modulus());
    return Fp(rng.range(-9, 9));
}

inline Rat random_coefficient(SplitMix64& rng, const Rat&) { return Rat(rng.range(-9, 9)); }

}  // namespace mfwild
