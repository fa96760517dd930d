#pragma once

// Exact ground-field scalars: the rationals (GMP-backed) and prime fields with
// a runtime characteristic. Both carry Eigen::NumTraits so they can live in
// Eigen dense matrices.

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace schurder {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Element of GF(p). The modulus travels with the value; a default-constructed
/// element is zero with modulus 0 and adopts the modulus of whatever it meets.
class ModP {
public:
    ModP() = default;
    ModP(std::int64_t v) : v_(0), p_(0) { raw_ = v; }
    ModP(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p == 0) throw std::invalid_argument("ModP: modulus must be positive");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t value() const { return resolved(p_); }
    std::uint32_t modulus() const { return p_; }

    friend ModP operator+(const ModP& a, const ModP& b) { return combine(a, b, '+'); }
    friend ModP operator-(const ModP& a, const ModP& b) { return combine(a, b, '-'); }
    friend ModP operator*(const ModP& a, const ModP& b) { return combine(a, b, '*'); }
    friend ModP operator/(const ModP& a, const ModP& b) {
        std::uint32_t p = pick(a, b);
        if (p == 0) {
            if (b.raw_ == 0) throw std::domain_error("ModP: division by zero");
            return ModP(a.raw_ / b.raw_);
        }
        return a * inverse(ModP(b.resolved(p), p));
    }
    ModP operator-() const {
        if (p_ == 0) return ModP(-raw_);
        return ModP(-static_cast<std::int64_t>(v_), p_);
    }
    ModP& operator+=(const ModP& o) { return *this = *this + o; }
    ModP& operator-=(const ModP& o) { return *this = *this - o; }
    ModP& operator*=(const ModP& o) { return *this = *this * o; }
    ModP& operator/=(const ModP& o) { return *this = *this / o; }

    friend bool operator==(const ModP& a, const ModP& b) {
        std::uint32_t p = pick(a, b);
        if (p == 0) return a.raw_ == b.raw_;
        return a.resolved(p) == b.resolved(p);
    }
    friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }

    static ModP inverse(const ModP& a) {
        if (a.p_ == 0) throw std::domain_error("ModP: inverse without modulus");
        if (a.v_ == 0) throw std::domain_error("ModP: division by zero");
        // Fermat: a^(p-2)
        std::uint64_t base = a.v_, e = a.p_ - 2, r = 1;
        while (e) {
            if (e & 1) r = r * base % a.p_;
            base = base * base % a.p_;
            e >>= 1;
        }
        return ModP(static_cast<std::int64_t>(r), a.p_);
    }

    friend std::ostream& operator<<(std::ostream& os, const ModP& a) {
        return os << a.value();
    }

private:
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
    std::int64_t raw_ = 0;  // integer literal awaiting a modulus (only when p_ == 0)

    std::uint32_t resolved(std::uint32_t p) const {
        if (p_ != 0 || p == 0) return v_;
        std::int64_t r = raw_ % static_cast<std::int64_t>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
    static std::uint32_t pick(const ModP& a, const ModP& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw std::domain_error("ModP: mixed moduli");
        return a.p_ ? a.p_ : b.p_;
    }
    static ModP combine(const ModP& a, const ModP& b, char op) {
        std::uint32_t p = pick(a, b);
        if (p == 0) {
            switch (op) {
                case '+': return ModP(a.raw_ + b.raw_);
                case '-': return ModP(a.raw_ - b.raw_);
                default: return ModP(a.raw_ * b.raw_);
            }
        }
        std::uint64_t x = a.resolved(p), y = b.resolved(p);
        switch (op) {
            case '+': return ModP(static_cast<std::int64_t>((x + y) % p), p);
            case '-': return ModP(static_cast<std::int64_t>((x + p - y) % p), p);
            default: return ModP(static_cast<std::int64_t>(x * y % p), p);
        }
    }
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x == ModP(0); }

/// "a/b" (or "a") for rationals, the canonical serialization.
inline std::string to_string(const Rational& x) { return x.str(); }
Rational parse_rational(const std::string& s);

/// True if n is prime (trial division; the values in play are small).
bool is_prime(long long n);

}  // namespace schurder

namespace Eigen {

template <>
struct NumTraits<schurder::Rational> : GenericNumTraits<schurder::Rational> {
    using Real = schurder::Rational;
    using NonInteger = schurder::Rational;
    using Nested = schurder::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<schurder::ModP> : GenericNumTraits<schurder::ModP> {
    using Real = schurder::ModP;
    using NonInteger = schurder::ModP;
    using Nested = schurder::ModP;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 5
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
