#include "homcat/ring.hpp"

namespace homcat {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Ring Ring::Fp(uint32_t p) {
    if (!is_prime_u32(p)) throw TypeMismatch("F_p modulus must be prime, got " + std::to_string(p));
    return Ring{RingKind::PrimeField, p};
}

std::string Ring::name() const {
    switch (kind) {
    case RingKind::Integers: return "z";
    case RingKind::Rationals: return "q";
    case RingKind::PrimeField: return "f" + std::to_string(p);
    }
    return "?";
}

Ring Ring::parse(const std::string& s) {
    if (s == "z" || s == "Z") return Z();
    if (s == "q" || s == "Q") return Q();
    if (s.size() >= 2 && (s[0] == 'f' || s[0] == 'F')) {
        long p = std::stol(s.substr(1));
        if (p < 2) throw ParseError("bad ring name '" + s + "'");
        return Fp(static_cast<uint32_t>(p));
    }
    throw ParseError("bad ring name '" + s + "' (expected z, q or f<p>)");
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) throw TypeMismatch("division by zero in F_" + std::to_string(p));
    // extended Euclid
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return uint32_t(t);
}

uint32_t fp_of_mpz(const mpz_class& v, uint32_t p) {
    mpz_class m = v % p;
    if (m < 0) m += p;
    return uint32_t(m.get_ui());
}

Scalar Scalar::from_int(const Ring& r, long v) {
    Scalar s;
    s.ring_ = r;
    switch (r.kind) {
    case RingKind::Integers: s.z_ = v; break;
    case RingKind::Rationals: s.q_ = v; break;
    case RingKind::PrimeField: {
        long m = v % long(r.p);
        if (m < 0) m += r.p;
        s.r_ = uint32_t(m);
        break;
    }
    }
    return s;
}

Scalar Scalar::integer(mpz_class v) {
    Scalar s;
    s.ring_ = Ring::Z();
    s.z_ = std::move(v);
    return s;
}

Scalar Scalar::rational(mpq_class v) {
    Scalar s;
    s.ring_ = Ring::Q();
    v.canonicalize();
    s.q_ = std::move(v);
    return s;
}

Scalar Scalar::residue(uint32_t p, long v) { return from_int(Ring::Fp(p), v); }

bool Scalar::is_zero() const {
    switch (ring_.kind) {
    case RingKind::Integers: return z_ == 0;
    case RingKind::Rationals: return q_ == 0;
    case RingKind::PrimeField: return r_ == 0;
    }
    return false;
}

bool Scalar::is_one() const {
    switch (ring_.kind) {
    case RingKind::Integers: return z_ == 1;
    case RingKind::Rationals: return q_ == 1;
    case RingKind::PrimeField: return r_ == 1;
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.ring_ = ring_;
    switch (ring_.kind) {
    case RingKind::Integers: s.z_ = z_ + o.z_; break;
    case RingKind::Rationals: s.q_ = q_ + o.q_; break;
    case RingKind::PrimeField: s.r_ = fp_add(r_, o.r_, ring_.p); break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.ring_ = ring_;
    switch (ring_.kind) {
    case RingKind::Integers: s.z_ = z_ - o.z_; break;
    case RingKind::Rationals: s.q_ = q_ - o.q_; break;
    case RingKind::PrimeField: s.r_ = fp_sub(r_, o.r_, ring_.p); break;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s;
    s.ring_ = ring_;
    switch (ring_.kind) {
    case RingKind::Integers: s.z_ = z_ * o.z_; break;
    case RingKind::Rationals: s.q_ = q_ * o.q_; break;
    case RingKind::PrimeField: s.r_ = fp_mul(r_, o.r_, ring_.p); break;
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.ring_ = ring_;
    switch (ring_.kind) {
    case RingKind::Integers: s.z_ = -z_; break;
    case RingKind::Rationals: s.q_ = -q_; break;
    case RingKind::PrimeField: s.r_ = r_ == 0 ? 0 : ring_.p - r_; break;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (ring_ != o.ring_) return false;
    switch (ring_.kind) {
    case RingKind::Integers: return z_ == o.z_;
    case RingKind::Rationals: return q_ == o.q_;
    case RingKind::PrimeField: return r_ == o.r_;
    }
    return false;
}

Scalar Scalar::inverse() const {
    Scalar s;
    s.ring_ = ring_;
    switch (ring_.kind) {
    case RingKind::Integers:
        if (z_ != 1 && z_ != -1) throw TypeMismatch("integer " + z_.get_str() + " is not invertible");
        s.z_ = z_;
        break;
    case RingKind::Rationals:
        if (q_ == 0) throw TypeMismatch("division by zero in Q");
        s.q_ = 1 / q_;
        break;
    case RingKind::PrimeField: s.r_ = fp_inv(r_, ring_.p); break;
    }
    return s;
}

std::string Scalar::str() const {
    switch (ring_.kind) {
    case RingKind::Integers: return z_.get_str();
    case RingKind::Rationals: return q_.get_str();
    case RingKind::PrimeField: return std::to_string(r_);
    }
    return "?";
}

} // namespace homcat
