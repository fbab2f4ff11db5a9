#include "slitsurf/field.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <vector>

namespace slitsurf {

bool is_square_free(long d) {
    if (d < 0 || d == 1) return false;
    if (d == 0) return true;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

QuadExt::QuadExt(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 0) {
        if (sgn(b_) != 0) fail(Err::BadDiscriminant, "d=0 requires b=0");
    } else if (d_ == 1 || !is_square_free(d_)) {
        fail(Err::BadDiscriminant, "d must be 0 or a square-free integer >= 2");
    }
    canonicalize();
}

QuadExt QuadExt::rational(long num, long den) {
    if (den == 0) fail(Err::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return QuadExt(q);
}

void QuadExt::canonicalize() {
    if (sgn(b_) == 0) d_ = 0;
}

long QuadExt::combine_d(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    fail(Err::FieldMismatch, "mixing sqrt(" + std::to_string(x.d_) + ") with sqrt(" + std::to_string(y.d_) + ")");
}

bool QuadExt::is_integer() const {
    return is_rational() && a_.get_den() == 1;
}

int QuadExt::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d exactly.
    mpq_class a2 = a_ * a_;
    mpq_class b2d = b_ * b_ * d_;
    int c = cmp(a2, b2d);
    if (c == 0) return 0; // cannot happen for square-free d >= 2, kept for safety
    return (c > 0) ? sa : sb;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = combine_d(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    canonicalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = combine_d(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    canonicalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = combine_d(*this, o);
    mpq_class na = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    d_ = d;
    canonicalize();
    return *this;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    if (is_rational()) {
        return QuadExt(mpq_class(1) / a_);
    }
    // 1/(a+b√d) = (a - b√d)/(a^2 - b^2 d); the norm is nonzero since √d is irrational.
    mpq_class norm = a_ * a_ - b_ * b_ * d_;
    return QuadExt(a_ / norm, -b_ / norm, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    *this *= o.inverse();
    return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == y.d_) return x.a_ == y.a_ && x.b_ == y.b_;
    // Different discriminants are equal only when both are rational,
    // which canonicalization reduces to d == 0.
    return false;
}

namespace {

// Directed-rounding evaluation of a + b*sqrt(d) into rop.
void eval_quadext(mpfr_t rop, const QuadExt& x, mpfr_rnd_t rnd) {
    if (x.is_rational()) {
        mpfr_set_q(rop, x.a().get_mpq_t(), rnd);
        return;
    }
    mpfr_prec_t prec = mpfr_get_prec(rop);
    mpfr_t s, t;
    mpfr_init2(s, prec + 8);
    mpfr_init2(t, prec + 8);
    // b*sqrt(d) with rounding direction matching the sign of b.
    bool bpos = sgn(x.b()) > 0;
    mpfr_rnd_t inner = rnd;
    if (!bpos) inner = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
    mpfr_set_ui(s, static_cast<unsigned long>(x.d()), inner);
    mpfr_sqrt(s, s, inner);
    mpfr_set_q(t, x.b().get_mpq_t(), rnd);
    mpfr_mul(t, t, s, rnd); // sign handling: for b<0, s rounded opposite keeps direction
    mpfr_set_q(s, x.a().get_mpq_t(), rnd);
    mpfr_add(rop, s, t, rnd);
    mpfr_clear(s);
    mpfr_clear(t);
}

} // namespace

mpz_class QuadExt::floor() const {
    if (is_rational()) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num().get_mpz_t(), a_.get_den().get_mpz_t());
        return q;
    }
    // Estimate with mpfr at escalating precision, then confirm exactly.
    // The value is irrational, so it is never an integer and the brackets
    // below are strict.
    auto brackets = [this](const mpz_class& n) {
        QuadExt low = *this - QuadExt(n);
        if (low.sign() <= 0) return false;
        return (low - QuadExt(1)).sign() < 0;
    };
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        mpfr_t v;
        mpfr_init2(v, prec);
        eval_quadext(v, *this, MPFR_RNDD);
        mpfr_floor(v, v);
        mpz_class n;
        mpfr_get_z(n.get_mpz_t(), v, MPFR_RNDD);
        mpfr_clear(v);
        if (brackets(n)) return n;
        if (brackets(n - 1)) return n - 1;
        if (brackets(n + 1)) return n + 1;
        if (prec > (1 << 24)) fail(Err::Precondition, "floor: precision escalation failed");
    }
}

std::string QuadExt::str() const {
    std::string out = a_.get_str();
    if (!is_rational()) {
        if (sgn(b_) >= 0) out += "+";
        out += b_.get_str() + "r";
    }
    return out;
}

QuadExt QuadExt::parse(const std::string& text, long d_hint) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(Err::ParseError, "empty field element");
    // Split into rational part and optional "...r" part.
    bool has_r = s.back() == 'r' || s.back() == 'R';
    std::string apart = s, bpart;
    if (has_r) {
        s.pop_back();
        // find the sign separating a and b (skip index 0 and signs following '/' digits)
        size_t split = std::string::npos;
        for (size_t i = 1; i < s.size(); ++i) {
            if ((s[i] == '+' || s[i] == '-') && std::isdigit(static_cast<unsigned char>(s[i - 1]))) split = i;
        }
        if (split == std::string::npos) {
            apart = "0";
            bpart = s.empty() ? "1" : s;
        } else {
            apart = s.substr(0, split);
            bpart = s.substr(split);
        }
        if (bpart == "+" || bpart.empty()) bpart = "1";
        if (bpart == "-") bpart = "-1";
    }
    auto parse_q = [](std::string t) {
        if (!t.empty() && t.front() == '+') t.erase(t.begin());
        try {
            mpq_class q(t);
            q.canonicalize();
            return q;
        } catch (const std::exception&) {
            fail(Err::ParseError, "bad rational: " + t);
        }
    };
    mpq_class a = parse_q(apart);
    if (!has_r) return QuadExt(a);
    mpq_class b = parse_q(bpart);
    if (sgn(b) != 0 && d_hint == 0)
        fail(Err::ParseError, "field element uses r but no discriminant is set");
    return QuadExt(a, b, sgn(b) == 0 ? 0 : d_hint);
}

Approx to_float(const QuadExt& x, int precision_bits) {
    if (precision_bits < 32) fail(Err::Precondition, "precision_bits must be >= 32");
    mpfr_prec_t prec = precision_bits + 16;
    mpfr_t lo, hi, mid, rad;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(mid, prec);
    mpfr_init2(rad, prec);
    eval_quadext(lo, x, MPFR_RNDD);
    eval_quadext(hi, x, MPFR_RNDU);
    mpfr_add(mid, lo, hi, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    mpfr_sub(rad, hi, lo, MPFR_RNDU);

    Approx out;
    out.value = mpfr_get_d(mid, MPFR_RNDN);
    // Total bound: interval radius plus the final double rounding error.
    mpfr_t err;
    mpfr_init2(err, prec);
    mpfr_set_d(err, out.value, MPFR_RNDN);
    mpfr_sub(err, err, mid, MPFR_RNDA);
    mpfr_abs(err, err, MPFR_RNDU);
    mpfr_add(err, err, rad, MPFR_RNDU);
    out.error = mpfr_get_d(err, MPFR_RNDU);

    int digits = static_cast<int>(precision_bits * 0.30103) + 2;
    std::vector<char> buf(digits + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, mid);
    out.decimal = buf.data();

    mpfr_clear(err);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(mid);
    mpfr_clear(rad);
    return out;
}

} // namespace slitsurf
