#include "slitsurf/twist.hpp"

namespace slitsurf {

namespace {

QuadExt cross_v1w(const Splitting& s, const PartnerPair& p) { return cross(p.v1, s.w); }
QuadExt cross_v2w(const Splitting& s, const PartnerPair& p) { return cross(p.v2, s.w); }

Vec2 twist_direction(const PartnerPair& p) { return p.v1 + p.v2; }

} // namespace

PartnerPair make_partner_pair(const Splitting& s, Vec2 v1, Vec2 v2) {
    if (!is_primitive(s.L1, v1)) fail(Err::NotPrimitive, "v1 is not primitive in L1");
    if (!is_primitive(s.L2, v2)) fail(Err::NotPrimitive, "v2 is not primitive in L2");
    QuadExt c1 = cross(v1, s.w);
    QuadExt c2 = cross(v2, s.w);
    if (c1.is_zero()) fail(Err::ParallelToW, "v1 parallel to w");
    if (c2.is_zero()) fail(Err::ParallelToW, "v2 parallel to w");
    if (c1.sign() < 0) { v1 = -v1; c1 = -c1; }
    if (c2.sign() < 0) { v2 = -v2; c2 = -c2; }
    if ((c1 - s.area1()).sign() > 0)
        fail(Err::CrossTooLarge, "|cross(v1,w)| exceeds area of T1");
    if (s.stratum == Stratum::H2) {
        if (c2 != s.area2())
            fail(Err::H2Mismatch, "H2 requires |cross(v2,w)| = area of T2");
    } else if ((c2 - s.area2()).sign() > 0) {
        fail(Err::CrossTooLarge, "|cross(v2,w)| exceeds area of T2");
    }
    return PartnerPair{std::move(v1), std::move(v2)};
}

MaxTwists max_twists(const Splitting& s, const PartnerPair& pair) {
    QuadExt x = cross(pair.v1, pair.v2).abs();
    if (x.is_zero()) return MaxTwists{true, 0};
    QuadExt c1 = cross_v1w(s, pair).abs();
    QuadExt c2 = cross_v2w(s, pair).abs();
    QuadExt m = (c1 > c2) ? c1 : c2;
    // Largest n with x < m/n, i.e. n < m/x (strict).
    QuadExt q = m / x;
    mpz_class n = q.floor();
    if (QuadExt(n) == q) n -= 1; // boundary: equality does not count
    if (n < 0) n = 0;
    if (!n.fits_slong_p()) fail(Err::Precondition, "twist count overflow");
    return MaxTwists{false, n.get_si()};
}

bool twist_allowed(const Splitting& s, const PartnerPair& pair, long k) {
    if (k == 0) fail(Err::ZeroTwist, "k must be nonzero");
    Vec2 wk = s.w + QuadExt(k) * twist_direction(pair);
    return cross(pair.v1, wk).sign() > 0 && cross(pair.v2, wk).sign() > 0;
}

TwistResult apply_twist(const Splitting& s, const PartnerPair& pair, long k) {
    if (!twist_allowed(s, pair, k)) fail(Err::NotAllowed, "twist not allowed for this k");
    Vec2 delta = twist_direction(pair);
    Vec2 w_new = s.w + QuadExt(k) * delta;

    // The cylinders are fixed by the surgery, so each torus is regenerated by
    // its core vector and the old crossing vector plus the new slit holonomy.
    CylinderFrame f1 = basis_completion(s.L1, pair.v1, s.w, true);
    CylinderFrame f2 = basis_completion(s.L2, pair.v2, s.w, true);

    Splitting out;
    out.stratum = s.stratum;
    out.w = w_new;
    out.L1 = Lattice(pair.v1, f1.u1 + QuadExt(k) * delta);
    out.L2 = Lattice(pair.v2, f2.u1 + QuadExt(k) * delta);

    ValidityReport rep = validate(out);
    if (!rep.ok()) fail(Err::InvalidResult, "twisted splitting failed validation:\n" + rep.summary());

    TwistCertificate cert;
    cert.pair = pair;
    cert.k = k;
    cert.w_new = w_new;
    QuadExt c1 = cross(pair.v1, s.w).abs();
    cert.exchanged_area_bound = c1 + cross(pair.v1, w_new).abs();
    cert.irrational_in_L1_after = !is_rational_in(out, 1);
    return TwistResult{std::move(out), std::move(cert)};
}

QuadExt exchanged_area_bound(const TwistCertificate& cert) { return cert.exchanged_area_bound; }

QuadExt exchanged_area_bound_loose(const Splitting& s, const TwistCertificate& cert) {
    QuadExt c1 = cross(cert.pair.v1, s.w).abs();
    QuadExt x = cross(cert.pair.v1, cert.pair.v2).abs();
    return QuadExt(2) * c1 + QuadExt(std::abs(cert.k)) * x;
}

namespace {

// Sign whose ladder {s, 2s, 3s} is fully allowed; positive preferred.
long ladder_sign(const Splitting& s, const PartnerPair& pair, long depth) {
    auto all_allowed = [&](long sign) {
        for (long k = 1; k <= depth; ++k)
            if (!twist_allowed(s, pair, sign * k)) return false;
        return true;
    };
    if (all_allowed(1)) return 1;
    if (all_allowed(-1)) return -1;
    return 0;
}

} // namespace

IrrationalTwist choose_irrational_twist(const Splitting& s, const PartnerPair& pair) {
    if (is_rational_in(s, 1))
        fail(Err::Precondition, "choose_irrational_twist requires irrational in L1");
    if (!max_twists(s, pair).at_least(3))
        fail(Err::Precondition, "pair must admit at least 3 twists");
    long sign = ladder_sign(s, pair, 3);
    if (sign == 0) fail(Err::LemmaViolation, "no sign admits three twists");
    for (long j = 1; j <= 3; ++j) {
        long k = sign * j;
        TwistResult r = apply_twist(s, pair, k);
        if (r.cert.irrational_in_L1_after) return IrrationalTwist{k, std::move(r)};
    }
    fail(Err::LemmaViolation, "all three twists came out rational in L1");
}

SlopeRotation slope_and_rotation(const Splitting& s, const PartnerPair& pair, long k) {
    if (k == 0) fail(Err::ZeroTwist, "k must be nonzero");
    QuadExt c1 = cross(pair.v1, s.w);
    if (c1.is_zero()) fail(Err::ParallelToW, "v1 parallel to w");
    // Normalized cross products: the frame maps v1 to (1,0) and w to (0,1),
    // scaling every cross product by 1/cross(v1,w).
    QuadExt c12 = cross(pair.v1, pair.v2) / c1;
    QuadExt c2w = cross(pair.v2, s.w) / c1;

    QuadExt num = QuadExt(1) + QuadExt(k) * c12;
    QuadExt den = QuadExt(k) * (QuadExt(1) + c2w);
    if (den.is_zero()) fail(Err::Precondition, "degenerate pair: 1 + cross(v2,w) = 0 in frame");
    SlopeRotation out;
    out.sigma = num / den;
    if (out.sigma.is_zero()) fail(Err::SigmaZero, "slope is zero; rotation number undefined");

    CylinderFrame f = basis_completion(s.L1, pair.v1, s.w, true);
    QuadExt theta_norm = f.theta_cyl / c1;
    QuadExt v0w_norm = cross(f.v0, s.w) / c1;
    out.rho = -theta_norm / out.sigma - v0w_norm;
    return out;
}

InitialSearchResult initial_irrational_search(const Splitting& s, const Vec2& v1, const Vec2& v2,
                                              const Vec2& v2p) {
    if (!is_rational_in(s, 1) || !is_rational_in(s, 2))
        fail(Err::Precondition, "initial search requires a rational-in-both splitting");
    PartnerPair pa = make_partner_pair(s, v1, v2);
    PartnerPair pb = make_partner_pair(s, v1, v2p);
    if (!max_twists(s, pa).at_least(2) || !max_twists(s, pb).at_least(2))
        fail(Err::Precondition, "both partners must admit at least 2 twists");
    if (cross(pa.v2 - pb.v2, s.w).is_zero())
        fail(Err::Precondition, "v2 - v2' must not be parallel to w");

    int which = 2;
    for (const PartnerPair* pp : {&pa, &pb}) {
        long sign = ladder_sign(s, *pp, 2);
        if (sign == 0) fail(Err::LemmaViolation, "no sign admits two twists");
        for (long j = 1; j <= 2; ++j) {
            long k = sign * j;
            TwistResult r = apply_twist(s, *pp, k);
            if (r.cert.irrational_in_L1_after)
                return FoundIrrational{k, which, std::move(r.s)};
        }
        which = 3;
    }

    // Every twist stayed rational: record the normalized-frame data.
    QuadExt c1 = cross(pa.v1, s.w);
    CylinderFrame f = basis_completion(s.L1, pa.v1, s.w, true);
    VeechCertificate cert;
    cert.theta = f.theta_cyl / c1;
    cert.v0w = cross(f.v0, s.w) / c1;
    cert.v1v2 = cross(pa.v1, pa.v2) / c1;
    cert.v1v2p = cross(pb.v1, pb.v2) / c1;
    cert.v2w = cross(pa.v2, s.w) / c1;
    cert.v2pw = cross(pb.v2, s.w) / c1;
    cert.all_rational = cert.theta.is_rational() && cert.v0w.is_rational() &&
                        cert.v1v2.is_rational() && cert.v1v2p.is_rational() &&
                        cert.v2w.is_rational() && cert.v2pw.is_rational();
    return cert;
}

} // namespace slitsurf
