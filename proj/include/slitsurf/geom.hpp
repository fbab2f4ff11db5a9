#pragma once

#include <utility>
#include <vector>

#include "slitsurf/field.hpp"

namespace slitsurf {

struct Vec2 {
    QuadExt x, y;

    Vec2() = default;
    Vec2(QuadExt px, QuadExt py) : x(std::move(px)), y(std::move(py)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    Vec2 operator-() const { return {-x, -y}; }
    friend Vec2 operator+(const Vec2& u, const Vec2& v) { return {u.x + v.x, u.y + v.y}; }
    friend Vec2 operator-(const Vec2& u, const Vec2& v) { return {u.x - v.x, u.y - v.y}; }
    friend Vec2 operator*(const QuadExt& c, const Vec2& v) { return {c * v.x, c * v.y}; }
    friend bool operator==(const Vec2& u, const Vec2& v) { return u.x == v.x && u.y == v.y; }
    friend bool operator!=(const Vec2& u, const Vec2& v) { return !(u == v); }
    QuadExt len_sq() const { return x * x + y * y; }
};

inline QuadExt cross(const Vec2& u, const Vec2& v) { return u.x * v.y - v.x * u.y; }
inline QuadExt dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

/// Rank-2 lattice spanned by b1, b2 with cross(b1,b2) != 0.
struct Lattice {
    Vec2 b1, b2;

    Lattice() = default;
    Lattice(Vec2 v, Vec2 w);

    QuadExt det() const { return cross(b1, b2); } // signed
    QuadExt coarea() const { return det().abs(); }

    // v = alpha*b1 + beta*b2, solved exactly by cross products.
    std::pair<QuadExt, QuadExt> coords(const Vec2& v) const;

    bool contains(const Vec2& v) const;
    bool same_lattice(const Lattice& o) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.b1 == b.b1 && a.b2 == b.b2; }
};

// Integer coordinates with gcd 1; the zero vector is not primitive.
bool is_primitive(const Lattice& L, const Vec2& v);

// All primitive v in L with 0 < |cross(v,w)| <= bound and lattice coordinates
// of absolute value <= height_cap, sorted by (|cross(v,w)|, |v|^2, coords).
std::vector<Vec2> enumerate_small_cross(const Lattice& L, const Vec2& w, const QuadExt& bound,
                                        long height_cap);

struct CoordVec {
    mpz_class p, q; // coordinates in the lattice basis
    Vec2 v;
    QuadExt cross_abs;
    QuadExt len_sq;
};

// Core enumeration behind enumerate_small_cross. allow_zero_cross admits
// vectors parallel to w; canonical_sign keeps one vector per antipodal pair.
std::vector<CoordVec> enumerate_small_cross_coords(const Lattice& L, const Vec2& w,
                                                   const QuadExt& bound, long height_cap,
                                                   bool allow_zero_cross, bool canonical_sign);

// Extends (p,q) with gcd(p,q)=1 to a unimodular matrix [[p,r],[q,s]], ps-qr=1.
std::pair<mpz_class, mpz_class> unimodular_complement(const mpz_class& p, const mpz_class& q);

} // namespace slitsurf
