#include "slitsurf/interval.hpp"

#include <algorithm>
#include <vector>

namespace slitsurf {

namespace {

// Same directed evaluation as field.cpp's to_float path, local copy to keep
// the interval layer self-contained.
void eval_quadext_dir(mpfr_t rop, const QuadExt& x, mpfr_rnd_t rnd) {
    if (x.is_rational()) {
        mpfr_set_q(rop, x.a().get_mpq_t(), rnd);
        return;
    }
    mpfr_prec_t prec = mpfr_get_prec(rop);
    mpfr_t s, t;
    mpfr_init2(s, prec + 8);
    mpfr_init2(t, prec + 8);
    bool bpos = sgn(x.b()) > 0;
    mpfr_rnd_t inner = bpos ? rnd : ((rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD);
    mpfr_set_ui(s, static_cast<unsigned long>(x.d()), inner);
    mpfr_sqrt(s, s, inner);
    mpfr_set_q(t, x.b().get_mpq_t(), rnd);
    mpfr_mul(t, t, s, rnd);
    mpfr_set_q(s, x.a().get_mpq_t(), rnd);
    mpfr_add(rop, s, t, rnd);
    mpfr_clear(s);
    mpfr_clear(t);
}

} // namespace

Ival::Ival() {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Ival::Ival(const Ival& o) {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Ival::Ival(Ival&& o) noexcept {
    mpfr_init2(lo_, kPrec);
    mpfr_init2(hi_, kPrec);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Ival& Ival::operator=(Ival o) noexcept {
    swap(o);
    return *this;
}

void Ival::swap(Ival& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Ival::~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Ival Ival::from(const QuadExt& x) {
    Ival r;
    eval_quadext_dir(r.lo_, x, MPFR_RNDD);
    eval_quadext_dir(r.hi_, x, MPFR_RNDU);
    return r;
}

Ival Ival::from_double(double x) {
    Ival r;
    mpfr_set_d(r.lo_, x, MPFR_RNDD);
    mpfr_set_d(r.hi_, x, MPFR_RNDU);
    return r;
}

Ival Ival::exact_zero() { return Ival(); }

Ival Ival::pi() {
    Ival r;
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Ival Ival::from_strings(const std::string& lo, const std::string& hi) {
    Ival r;
    if (mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD) != 0)
        fail(Err::ParseError, "bad interval endpoint: " + lo);
    if (mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU) != 0)
        fail(Err::ParseError, "bad interval endpoint: " + hi);
    return r;
}

double Ival::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Ival::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Ival::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, kPrec);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(m, m, 2, MPFR_RNDN);
    double v = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return v;
}

namespace {
std::string mpfr_to_string(const mpfr_t v) {
    char buf[96];
    mpfr_snprintf(buf, sizeof(buf), "%.40Re", v);
    return buf;
}
} // namespace

std::string Ival::lo_string() const { return mpfr_to_string(lo_); }
std::string Ival::hi_string() const { return mpfr_to_string(hi_); }

bool Ival::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Ival::definitely_positive() const { return mpfr_sgn(lo_) > 0; }

bool Ival::definitely_less(const Ival& a, const Ival& b) { return mpfr_cmp(a.hi_, b.lo_) < 0; }
bool Ival::definitely_leq(const Ival& a, const Ival& b) { return mpfr_cmp(a.hi_, b.lo_) <= 0; }

Ival operator+(const Ival& a, const Ival& b) {
    Ival r;
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival operator-(const Ival& a, const Ival& b) {
    Ival r;
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Ival operator*(const Ival& a, const Ival& b) {
    // Four corner products with directed rounding.
    Ival r;
    mpfr_t c[8];
    for (auto& m : c) mpfr_init2(m, Ival::kPrec);
    const mpfr_t* as[2] = {&a.lo_, &a.hi_};
    const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
    int k = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(c[k], *as[i], *bs[j], MPFR_RNDD);
            mpfr_mul(c[k + 4], *as[i], *bs[j], MPFR_RNDU);
            ++k;
        }
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    mpfr_set(r.hi_, c[4], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) {
        if (mpfr_cmp(c[i], r.lo_) < 0) mpfr_set(r.lo_, c[i], MPFR_RNDD);
        if (mpfr_cmp(c[i + 4], r.hi_) > 0) mpfr_set(r.hi_, c[i + 4], MPFR_RNDU);
    }
    for (auto& m : c) mpfr_clear(m);
    return r;
}

Ival operator/(const Ival& a, const Ival& b) {
    if (b.contains_zero()) fail(Err::DivisionByZero, "interval division by zero-straddling interval");
    Ival r;
    mpfr_t c[8];
    for (auto& m : c) mpfr_init2(m, Ival::kPrec);
    const mpfr_t* as[2] = {&a.lo_, &a.hi_};
    const mpfr_t* bs[2] = {&b.lo_, &b.hi_};
    int k = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(c[k], *as[i], *bs[j], MPFR_RNDD);
            mpfr_div(c[k + 4], *as[i], *bs[j], MPFR_RNDU);
            ++k;
        }
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    mpfr_set(r.hi_, c[4], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) {
        if (mpfr_cmp(c[i], r.lo_) < 0) mpfr_set(r.lo_, c[i], MPFR_RNDD);
        if (mpfr_cmp(c[i + 4], r.hi_) > 0) mpfr_set(r.hi_, c[i + 4], MPFR_RNDU);
    }
    for (auto& m : c) mpfr_clear(m);
    return r;
}

Ival Ival::abs() const {
    Ival r(*this);
    if (mpfr_sgn(lo_) >= 0) return r;
    if (mpfr_sgn(hi_) <= 0) {
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }
    mpfr_t nl;
    mpfr_init2(nl, kPrec);
    mpfr_neg(nl, lo_, MPFR_RNDU);
    if (mpfr_cmp(nl, hi_) > 0)
        mpfr_set(r.hi_, nl, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_clear(nl);
    return r;
}

Ival Ival::sqrt() const {
    if (mpfr_sgn(lo_) < 0) fail(Err::Precondition, "interval sqrt of negative");
    Ival r;
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Ival Ival::min(const Ival& a, const Ival& b) {
    Ival r;
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Ival Ival::atan2(const Ival& y, const Ival& x) {
    // Corner evaluation is valid only when the box stays clear of the branch
    // cut {y = 0, x <= 0}. Callers arrange sign-definite inputs.
    bool y_pos = mpfr_sgn(y.lo_) > 0;
    bool y_neg = mpfr_sgn(y.hi_) < 0;
    if (!y_pos && !y_neg) {
        if (mpfr_zero_p(y.lo_) && mpfr_zero_p(y.hi_)) {
            if (mpfr_sgn(x.lo_) > 0) return Ival::exact_zero();
            if (mpfr_sgn(x.hi_) < 0) return Ival::pi();
            fail(Err::Precondition, "atan2 box contains the origin");
        }
        if (mpfr_sgn(x.lo_) <= 0) fail(Err::Precondition, "atan2 box crosses the branch cut");
    }
    Ival r;
    mpfr_t c[8];
    for (auto& m : c) mpfr_init2(m, Ival::kPrec);
    const mpfr_t* ys[2] = {&y.lo_, &y.hi_};
    const mpfr_t* xs[2] = {&x.lo_, &x.hi_};
    int k = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_atan2(c[k], *ys[i], *xs[j], MPFR_RNDD);
            mpfr_atan2(c[k + 4], *ys[i], *xs[j], MPFR_RNDU);
            ++k;
        }
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    mpfr_set(r.hi_, c[4], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) {
        if (mpfr_cmp(c[i], r.lo_) < 0) mpfr_set(r.lo_, c[i], MPFR_RNDD);
        if (mpfr_cmp(c[i + 4], r.hi_) > 0) mpfr_set(r.hi_, c[i + 4], MPFR_RNDU);
    }
    for (auto& m : c) mpfr_clear(m);
    return r;
}

Ival angle_between(const Vec2& u, const Vec2& v) {
    if (u.is_zero() || v.is_zero()) fail(Err::Precondition, "angle_between: zero vector");
    QuadExt cr = cross(u, v).abs();
    QuadExt dt = dot(u, v);
    if (cr.is_zero()) {
        if (dt.sign() > 0) return Ival::exact_zero();
        return Ival::pi();
    }
    return Ival::atan2(Ival::from(cr), Ival::from(dt));
}

Ival direction_angle(const Vec2& v) {
    if (v.is_zero()) fail(Err::Precondition, "direction_angle: zero vector");
    int sy = v.y.sign();
    if (sy == 0) {
        if (v.x.sign() > 0) return Ival::exact_zero();
        return Ival::pi();
    }
    return Ival::atan2(Ival::from(v.y), Ival::from(v.x));
}

int compare_direction(const Vec2& u, const Vec2& v) {
    auto rank = [](const Vec2& a) {
        int sy = a.y.sign();
        if (sy < 0) return 0;
        if (sy == 0) return a.x.sign() > 0 ? 1 : 3;
        return 2;
    };
    int ru = rank(u), rv = rank(v);
    if (ru != rv) return ru < rv ? -1 : 1;
    if (ru == 1 || ru == 3) return 0; // same axis direction
    return -cross(u, v).sign();       // within an open half-plane
}

Ival length_interval(const Vec2& v) { return Ival::from(v.len_sq()).sqrt(); }

} // namespace slitsurf
