#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "slitsurf/errors.hpp"

namespace slitsurf {

/// Exact scalar a + b*sqrt(d) over the rationals, d a square-free
/// nonnegative integer. d == 0 means a plain rational (b is forced to 0),
/// so values of different sessions mix freely as long as at most one
/// irrational discriminant is involved. All predicates (sign, comparison,
/// floor) are exact; no floating point enters any decision.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long v) : a_(v), b_(0), d_(0) {}
    QuadExt(const mpz_class& v) : a_(v), b_(0), d_(0) {}
    QuadExt(const mpq_class& v) : a_(v), b_(0), d_(0) { a_.canonicalize(); }
    QuadExt(mpq_class a, mpq_class b, long d);

    static QuadExt sqrt_of(long d) { return QuadExt(0, 1, d); }
    static QuadExt rational(long num, long den);

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    long d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    // Rational with denominator 1.
    bool is_integer() const;

    // Exact sign: case analysis on signs of a, b and comparison of a^2 vs b^2 d.
    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { x += y; return x; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { x -= y; return x; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { x *= y; return x; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { x /= y; return x; }

    QuadExt inverse() const;
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

    // Largest integer <= value. Exact for any magnitude.
    mpz_class floor() const;
    mpz_class ceil() const { return -((-*this).floor()); }
    // Value minus its floor, in [0,1).
    QuadExt frac() const { return *this - QuadExt(mpz_class(floor())); }

    // Human-readable form like "3/2", "1+2r", "-1/2-3/4r" (r stands for sqrt(d)).
    std::string str() const;

    // Parses the str() syntax. d_hint supplies the discriminant for the "r" part.
    static QuadExt parse(const std::string& text, long d_hint);

private:
    mpq_class a_, b_;
    long d_;

    void canonicalize();
    static long combine_d(const QuadExt& x, const QuadExt& y);
};

struct Approx {
    double value = 0.0;
    double error = 0.0;      // |true - value| <= error (absolute)
    std::string decimal;     // decimal rendering at the requested precision
};

// Floating approximation with a certified error bound. The decimal string is
// accurate to precision_bits; the double value carries the usual 53-bit limit.
Approx to_float(const QuadExt& x, int precision_bits);

bool is_square_free(long d);

} // namespace slitsurf
