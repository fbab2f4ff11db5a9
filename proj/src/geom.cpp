#include "slitsurf/geom.hpp"

#include <algorithm>

namespace slitsurf {

Lattice::Lattice(Vec2 v, Vec2 w) : b1(std::move(v)), b2(std::move(w)) {
    if (cross(b1, b2).is_zero()) fail(Err::DegenerateLattice, "lattice basis is parallel");
}

std::pair<QuadExt, QuadExt> Lattice::coords(const Vec2& v) const {
    QuadExt den = det();
    return {cross(v, b2) / den, cross(b1, v) / den};
}

bool Lattice::contains(const Vec2& v) const {
    auto [a, b] = coords(v);
    return a.is_integer() && b.is_integer();
}

bool Lattice::same_lattice(const Lattice& o) const {
    if (!contains(o.b1) || !contains(o.b2)) return false;
    auto [a1, b1c] = coords(o.b1);
    auto [a2, b2c] = coords(o.b2);
    QuadExt d = a1 * b2c - a2 * b1c;
    return d == QuadExt(1) || d == QuadExt(-1);
}

bool is_primitive(const Lattice& L, const Vec2& v) {
    if (v.is_zero()) return false;
    auto [a, b] = L.coords(v);
    if (!a.is_integer() || !b.is_integer()) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.a().get_num().get_mpz_t(), b.a().get_num().get_mpz_t());
    return g == 1;
}

std::pair<mpz_class, mpz_class> unimodular_complement(const mpz_class& p, const mpz_class& q) {
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) fail(Err::NotPrimitive, "coordinates are not coprime");
    // p*s + q*t = 1  ->  det [[p, -t],[q, s]] = p*s + t*q = 1
    return {-t, s};
}

namespace {

mpz_class gcd_abs(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

} // namespace

std::vector<CoordVec> enumerate_small_cross_coords(const Lattice& L, const Vec2& w,
                                                   const QuadExt& bound, long height_cap,
                                                   bool allow_zero_cross, bool canonical_sign) {
    if (w.is_zero()) fail(Err::Precondition, "enumerate_small_cross: w must be nonzero");
    if (bound.sign() <= 0) fail(Err::Precondition, "enumerate_small_cross: bound must be positive");
    if (height_cap < 1) fail(Err::Precondition, "enumerate_small_cross: height_cap must be >= 1");

    QuadExt x1 = cross(L.b1, w);
    QuadExt x2 = cross(L.b2, w);

    std::vector<CoordVec> out;
    auto consider = [&](const mpz_class& p, const mpz_class& q) {
        if (p == 0 && q == 0) return;
        if (gcd_abs(p, q) != 1) return;
        QuadExt c = QuadExt(p) * x1 + QuadExt(q) * x2;
        QuadExt ca = c.abs();
        int s = ca.sign();
        if (!allow_zero_cross && s == 0) return;
        if ((ca - bound).sign() > 0) return;
        Vec2 v = QuadExt(p) * L.b1 + QuadExt(q) * L.b2;
        out.push_back(CoordVec{p, q, v, std::move(ca), v.len_sq()});
    };

    mpz_class cap(height_cap);
    auto sweep = [&](const QuadExt& sweep_x, const QuadExt& other_x, bool p_is_sweep) {
        // For each sweep coordinate t, the other coordinate u must satisfy
        // |t*sweep_x + u*other_x| <= bound: a closed interval in u.
        for (mpz_class t = -cap; t <= cap; ++t) {
            QuadExt base = QuadExt(t) * sweep_x;
            QuadExt lo_q = (-bound - base) / other_x;
            QuadExt hi_q = (bound - base) / other_x;
            if (lo_q > hi_q) std::swap(lo_q, hi_q);
            mpz_class u0 = lo_q.ceil(), u1 = hi_q.floor();
            if (u0 < -cap) u0 = -cap;
            if (u1 > cap) u1 = cap;
            for (mpz_class u = u0; u <= u1; ++u) {
                if (p_is_sweep)
                    consider(t, u);
                else
                    consider(u, t);
            }
        }
    };

    if (!x2.is_zero()) {
        sweep(x1, x2, true);
    } else if (!x1.is_zero()) {
        sweep(x2, x1, false);
    } else {
        fail(Err::Precondition, "enumerate_small_cross: w has zero cross with both basis vectors");
    }

    if (canonical_sign) {
        std::erase_if(out, [](const CoordVec& cv) {
            int sp = sgn(cv.p);
            return sp < 0 || (sp == 0 && sgn(cv.q) < 0);
        });
    }

    std::sort(out.begin(), out.end(), [](const CoordVec& a, const CoordVec& b) {
        if (a.cross_abs != b.cross_abs) return a.cross_abs < b.cross_abs;
        if (a.len_sq != b.len_sq) return a.len_sq < b.len_sq;
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    });
    return out;
}

std::vector<Vec2> enumerate_small_cross(const Lattice& L, const Vec2& w, const QuadExt& bound,
                                        long height_cap) {
    auto coords = enumerate_small_cross_coords(L, w, bound, height_cap, false, false);
    std::vector<Vec2> out;
    out.reserve(coords.size());
    for (auto& cv : coords) out.push_back(cv.v);
    return out;
}

} // namespace slitsurf
