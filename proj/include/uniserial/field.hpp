#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uniserial {

// Thrown when an input file, path literal, or point string is malformed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact scalar: a rational when the characteristic is 0, a residue in
/// [0, p) when the characteristic is a prime p. Every element carries its
/// characteristic so mixed-field arithmetic is caught immediately.
class FieldElement {
public:
    FieldElement() : v_(0), p_(0) {}
    FieldElement(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) { canonicalize(); }

    unsigned long characteristic() const { return p_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElement operator-() const { return FieldElement(-v_, p_); }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        return FieldElement(v_ + o.v_, p_);
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        return FieldElement(v_ - o.v_, p_);
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        return FieldElement(v_ * o.v_, p_);
    }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (p_ == 0) return FieldElement(1 / v_, 0);
        mpz_class r;
        mpz_class mod(static_cast<unsigned long>(p_));
        if (mpz_invert(r.get_mpz_t(), v_.get_num().get_mpz_t(), mod.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible residue");
        return FieldElement(mpq_class(r), p_);
    }

    bool operator==(const FieldElement& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const {
        if (p_ != o.p_) return p_ < o.p_;
        return v_ < o.v_;
    }

    std::string str() const { return v_.get_str(); }

private:
    void canonicalize() {
        v_.canonicalize();
        if (p_ != 0) {
            // reduce a/b mod p via b^{-1}
            mpz_class mod(p_);
            mpz_class num = v_.get_num() % mod;
            if (num < 0) num += mod;
            if (v_.get_den() != 1) {
                mpz_class dinv;
                if (mpz_invert(dinv.get_mpz_t(), v_.get_den().get_mpz_t(), mod.get_mpz_t()) == 0)
                    throw std::domain_error("denominator not invertible mod p");
                num = (num * dinv) % mod;
            }
            v_ = mpq_class(num);
        }
    }
    void check(const FieldElement& o) const {
        if (p_ != o.p_) throw InternalError("mixed-field arithmetic");
    }

    mpq_class v_;
    unsigned long p_;
};

/// Field descriptor: rationals (p == 0) or the prime field GF(p).
class Field {
public:
    Field() : p_(0) {}
    explicit Field(unsigned long p) : p_(p) {
        if (p != 0 && !is_prime(p)) throw ParseError("GF modulus must be prime");
    }

    unsigned long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }

    FieldElement zero() const { return FieldElement(mpq_class(0), p_); }
    FieldElement one() const { return FieldElement(mpq_class(1), p_); }
    FieldElement from_long(long n) const { return FieldElement(mpq_class(n), p_); }
    FieldElement from_rational(long num, long den) const {
        return FieldElement(mpq_class(num, den), p_);
    }

    /// Parses "3", "-1", "3/2". In GF(p) the quotient is resolved mod p.
    FieldElement parse(const std::string& s) const {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParseError("bad field element: '" + s + "'");
        if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        return FieldElement(v, p_);
    }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    static bool is_prime(unsigned long p) {
        if (p < 2) return false;
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    unsigned long p_;
};

}  // namespace uniserial
