#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "homcat/error.hpp"

namespace homcat {

enum class RingKind { Integers, Rationals, PrimeField };

// Coefficient ring tag. PrimeField requires a prime modulus; compositeness is
// rejected at construction so everything downstream may assume a field.
struct Ring {
    RingKind kind = RingKind::Integers;
    uint32_t p = 0; // modulus, PrimeField only

    static Ring Z() { return Ring{RingKind::Integers, 0}; }
    static Ring Q() { return Ring{RingKind::Rationals, 0}; }
    static Ring Fp(uint32_t p);

    bool is_field() const { return kind != RingKind::Integers; }
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string name() const;              // "z", "q", "f2", ...
    static Ring parse(const std::string&); // inverse of name()
};

// One exact scalar. The ring is carried alongside the value; mixed-ring
// arithmetic throws RingMismatch. Rationals are always canonical (lowest
// terms, positive denominator); residues are canonical in [0, p).
class Scalar {
public:
    Scalar() : ring_(Ring::Z()) {}

    static Scalar zero(const Ring& r) { return from_int(r, 0); }
    static Scalar one(const Ring& r) { return from_int(r, 1); }
    static Scalar from_int(const Ring& r, long v);
    static Scalar integer(mpz_class v);
    static Scalar rational(mpq_class v); // canonicalizes
    static Scalar residue(uint32_t p, long v);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator-() const;
    bool operator==(const Scalar&) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Multiplicative inverse. Fields only; over Z only for +-1.
    Scalar inverse() const;

    // Typed access (callers must know the ring).
    const mpz_class& z() const { return z_; }
    const mpq_class& q() const { return q_; }
    uint32_t fp() const { return r_; }

    std::string str() const;

private:
    void check_same(const Scalar& o) const {
        if (ring_ != o.ring_) throw RingMismatch("scalar rings differ: " + ring_.name() + " vs " + o.ring_.name());
    }

    Ring ring_;
    mpz_class z_;
    mpq_class q_;
    uint32_t r_ = 0;
};

// residue arithmetic helpers (shared with the matrix kernels)
inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    return uint32_t(s >= p ? s - p : s);
}
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) { return uint32_t((uint64_t(a) * b) % p); }
uint32_t fp_inv(uint32_t a, uint32_t p);
uint32_t fp_of_mpz(const mpz_class& v, uint32_t p);

bool is_prime_u32(uint32_t n);

} // namespace homcat
