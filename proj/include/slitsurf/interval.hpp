#pragma once

#include <mpfr.h>

#include <string>

#include "slitsurf/geom.hpp"

namespace slitsurf {

/// Certified interval [lo, hi] with MPFR endpoints and outward rounding.
/// Used for every quantity that leaves the field (angles, lengths, spacing
/// minima); exact predicates never go through here.
class Ival {
public:
    static constexpr mpfr_prec_t kPrec = 192;

    Ival();
    Ival(const Ival& o);
    Ival(Ival&& o) noexcept;
    Ival& operator=(Ival o) noexcept;
    ~Ival();

    static Ival from(const QuadExt& x);
    static Ival from_double(double x);
    static Ival exact_zero();
    static Ival pi();
    // Parses decimal strings, rounding outward.
    static Ival from_strings(const std::string& lo, const std::string& hi);

    double lo_double() const;  // rounded down
    double hi_double() const;  // rounded up
    double mid_double() const;
    std::string lo_string() const;
    std::string hi_string() const;

    bool contains_zero() const;
    bool definitely_positive() const;

    // a.hi < b.lo
    static bool definitely_less(const Ival& a, const Ival& b);
    // a.hi <= b.lo
    static bool definitely_leq(const Ival& a, const Ival& b);

    friend Ival operator+(const Ival& a, const Ival& b);
    friend Ival operator-(const Ival& a, const Ival& b);
    friend Ival operator*(const Ival& a, const Ival& b);
    friend Ival operator/(const Ival& a, const Ival& b);
    Ival abs() const;
    Ival sqrt() const; // requires lo >= 0
    static Ival min(const Ival& a, const Ival& b);

    // atan2 over the box (y, x), valid when the box avoids the branch cut.
    static Ival atan2(const Ival& y, const Ival& x);

    void swap(Ival& o) noexcept;

private:
    mpfr_t lo_, hi_;
};

// Angle between two nonzero vectors, in [0, pi], via atan2(|cross|, dot).
Ival angle_between(const Vec2& u, const Vec2& v);

// Direction angle of a nonzero vector in (-pi, pi].
Ival direction_angle(const Vec2& v);

// Exact comparison of direction angles (atan2 order on (-pi, pi]).
// Returns -1, 0, +1.
int compare_direction(const Vec2& u, const Vec2& v);

// Euclidean length as an interval.
Ival length_interval(const Vec2& v);

} // namespace slitsurf
