/**
 * @file field.hh
 * @brief Exact coefficient fields: arbitrary-precision rationals and a fixed prime field.
 */
#ifndef LOCALCHI_FIELD_HH
#define LOCALCHI_FIELD_HH

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace localchi {

// ===== rationals =====

// mpq_class already keeps values in lowest terms with positive denominator
// after canonicalize(); this wrapper pins that invariant at construction.
class rational {
public:
    rational() : v_(0) {}
    rational(long n) : v_(n) {}
    rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        v_.canonicalize();
    }
    explicit rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static rational zero() { return rational(0); }
    static rational one() { return rational(1); }
    static rational from_fraction(long n, long d) { return rational(n, d); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    rational operator-() const { return rational(mpq_class(-v_)); }
    rational operator+(const rational& o) const { return rational(mpq_class(v_ + o.v_)); }
    rational operator-(const rational& o) const { return rational(mpq_class(v_ - o.v_)); }
    rational operator*(const rational& o) const { return rational(mpq_class(v_ * o.v_)); }
    rational operator/(const rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        return rational(mpq_class(v_ / o.v_));
    }
    rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
    rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
    rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }

    rational inv() const {
        if (is_zero()) throw std::domain_error("rational: inverse of zero");
        return rational(mpq_class(1 / v_));
    }

    bool operator==(const rational& o) const { return v_ == o.v_; }
    bool operator!=(const rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// ===== prime field =====

// GF(p) with the fixed Mersenne prime 2^31 - 1 (> 2^30 as required).
// Products of residues fit in uint64_t; inverses via Fermat.
class gfp {
public:
    static constexpr std::uint64_t P = 2147483647ull;

    gfp() : v_(0) {}
    gfp(long n) { v_ = reduce_long(n); }
    gfp(long n, long d) { *this = gfp(n) / gfp(d); }

    static gfp zero() { return gfp(0); }
    static gfp one() { return gfp(1); }
    static gfp from_fraction(long n, long d) { return gfp(n, d); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    gfp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    gfp operator+(const gfp& o) const {
        std::uint64_t s = v_ + o.v_;
        return from_raw(s >= P ? s - P : s);
    }
    gfp operator-(const gfp& o) const {
        return from_raw(v_ >= o.v_ ? v_ - o.v_ : v_ + P - o.v_);
    }
    gfp operator*(const gfp& o) const { return from_raw((v_ * o.v_) % P); }
    gfp operator/(const gfp& o) const { return *this * o.inv(); }
    gfp& operator+=(const gfp& o) { return *this = *this + o; }
    gfp& operator-=(const gfp& o) { return *this = *this - o; }
    gfp& operator*=(const gfp& o) { return *this = *this * o; }

    gfp inv() const {
        if (v_ == 0) throw std::domain_error("gfp: inverse of zero");
        return pow(P - 2);
    }

    bool operator==(const gfp& o) const { return v_ == o.v_; }
    bool operator!=(const gfp& o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }

private:
    std::uint64_t v_;

    static gfp from_raw(std::uint64_t v) {
        gfp r;
        r.v_ = v;
        return r;
    }
    static std::uint64_t reduce_long(long n) {
        long m = n % static_cast<long>(P);
        if (m < 0) m += static_cast<long>(P);
        return static_cast<std::uint64_t>(m);
    }
    gfp pow(std::uint64_t e) const {
        gfp base = *this, acc = one();
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
};

} // namespace localchi

#endif
