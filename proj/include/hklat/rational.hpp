#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "hklat/errors.hpp"

namespace hklat {

/// Exact rational number. Always reduced, denominator >= 1, canonical zero 0/1.
/// Backed by GMP; the wrapper keeps the canonical-form invariant on every path.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rat parse(const std::string& s);

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    static Rat inverse(const Rat& a);
    static Rat binomial(long n, long k);
    static Rat factorial(long n);

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Element of Q(i): re + im*i with exact rational parts.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(const Rat& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussRat(long n) : re_(n) {}          // NOLINT(google-explicit-constructor)
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    /// re^2 + im^2; zero only for the zero element.
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
    static GaussRat parse(const std::string& s);

private:
    Rat re_;
    Rat im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

// Scalar-field helpers shared by the templated linear algebra.
inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const GaussRat& x) { return x.is_zero(); }
inline Rat conjugate(const Rat& x) { return x; }
inline GaussRat conjugate(const GaussRat& x) { return x.conj(); }
inline std::string scalar_str(const Rat& x) { return x.str(); }
inline std::string scalar_str(const GaussRat& x) { return x.str(); }

}  // namespace hklat
