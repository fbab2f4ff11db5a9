#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "slitsurf/twist.hpp"

using namespace slitsurf;

namespace {

QuadExt r2() { return QuadExt::sqrt_of(2); }
Lattice z2() { return Lattice(Vec2(QuadExt(1), QuadExt(0)), Vec2(QuadExt(0), QuadExt(1))); }

Splitting paper_example() {
    Splitting s;
    s.L1 = Lattice(Vec2(QuadExt(1), QuadExt(0)), Vec2(QuadExt(0), QuadExt(2)));
    s.L2 = Lattice(Vec2(QuadExt(3), QuadExt(-1)), Vec2(QuadExt(4), QuadExt(1)));
    s.w = Vec2(QuadExt(0), QuadExt(1));
    s.stratum = Stratum::H11;
    return s;
}

Vec2 V(long x, long y) { return Vec2(QuadExt(x), QuadExt(y)); }

} // namespace

TEST_CASE("make_partner_pair normalization and errors") {
    Splitting s = paper_example();
    PartnerPair p = make_partner_pair(s, V(1, 0), V(3, -1));
    CHECK(p.v1 == V(1, 0));
    CHECK(p.v2 == V(3, -1));

    PartnerPair q = make_partner_pair(s, V(-1, 0), V(3, -1));
    CHECK(q.v1 == V(1, 0)); // sign flipped so cross(v1,w) > 0

    CHECK_THROWS_AS(make_partner_pair(s, V(1, 0), V(0, 7)), Error);   // not primitive in L2
    CHECK_THROWS_AS(make_partner_pair(s, V(0, 2), V(3, -1)), Error);  // v1 parallel to w
    // |cross(v1,w)| = 3 > A1 = 2
    Splitting t = paper_example();
    t.L2 = z2();
    CHECK_THROWS_AS(make_partner_pair(t, V(3, 1), V(1, 1)), Error);
}

TEST_CASE("max_twists") {
    Splitting s = paper_example();
    CHECK(max_twists(s, make_partner_pair(s, V(1, 0), V(3, -1))).n == 2);
    CHECK(max_twists(s, make_partner_pair(s, V(1, 0), V(4, 1))).n == 3);

    Splitting st;
    st.L1 = z2();
    st.L2 = z2();
    st.w = Vec2(QuadExt(0), r2() - QuadExt(1));
    st.stratum = Stratum::H11;
    PartnerPair par = make_partner_pair(st, V(1, 0), V(1, 0));
    CHECK(max_twists(st, par).unbounded);
}

TEST_CASE("twist_allowed") {
    Splitting s = paper_example();
    PartnerPair p = make_partner_pair(s, V(1, 0), V(3, -1));
    // cross(v1,w^k) = 1 - k, cross(v2,w^k) = 3 + k
    CHECK(twist_allowed(s, p, -1));
    CHECK(twist_allowed(s, p, -2));
    CHECK_FALSE(twist_allowed(s, p, -3));
    CHECK_FALSE(twist_allowed(s, p, 1));
    CHECK_FALSE(twist_allowed(s, p, 4));
    CHECK_THROWS_AS(twist_allowed(s, p, 0), Error);
}

TEST_CASE("apply_twist reproduces the worked example") {
    Splitting s = paper_example();
    PartnerPair p = make_partner_pair(s, V(1, 0), V(3, -1));

    TwistResult r1 = apply_twist(s, p, -1);
    CHECK(r1.s.w == V(-4, 2));
    CHECK(r1.s.area1() == QuadExt(3));
    CHECK(r1.s.area2() == QuadExt(6));
    CHECK(r1.s.L1.same_lattice(Lattice(V(1, 0), V(-4, 3))));
    CHECK(r1.s.L2.same_lattice(Lattice(V(3, -1), V(0, 2))));
    CHECK(r1.cert.exchanged_area_bound == QuadExt(3)); // 1 + 2
    CHECK(exchanged_area_bound_loose(s, r1.cert) == QuadExt(3));

    TwistResult r2_ = apply_twist(s, p, -2);
    CHECK(r2_.s.w == V(-8, 3));
    CHECK(r2_.s.area1() == QuadExt(4));
    CHECK(r2_.s.area2() == QuadExt(5));
    CHECK(r2_.cert.exchanged_area_bound == QuadExt(4)); // 1 + 3
    CHECK(exchanged_area_bound_loose(s, r2_.cert) == QuadExt(4));

    CHECK_THROWS_AS(apply_twist(s, p, 1), Error);
}

TEST_CASE("perturbed example goes irrational at k=-1") {
    Splitting s = paper_example();
    s.L1 = Lattice(V(1, 0), Vec2(QuadExt(0), QuadExt(2) + r2()));
    PartnerPair p = make_partner_pair(s, V(1, 0), V(3, -1));
    TwistResult r = apply_twist(s, p, -1);
    CHECK(r.s.L1.same_lattice(Lattice(V(1, 0), Vec2(QuadExt(-4), QuadExt(3) + r2()))));
    CHECK(r.cert.irrational_in_L1_after);
    auto [a, b] = r.s.L1.coords(r.s.w);
    CHECK(a / b == QuadExt(-2) - QuadExt(2) * r2());
}

TEST_CASE("surgery bookkeeping on random twists") {
    std::mt19937_64 rng(20240815u);
    std::uniform_int_distribution<long> pick(-4, 4);
    int done = 0, attempts = 0;
    while (done < 150 && ++attempts < 30000) {
        long d = std::array<long, 3>{0, 2, 5}[rng() % 3];
        auto q = [&](bool surd) {
            mpq_class a(pick(rng), 1 + std::abs(pick(rng)));
            a.canonicalize();
            if (!surd || d == 0) return QuadExt(a);
            mpq_class b(pick(rng), 2 + std::abs(pick(rng)));
            b.canonicalize();
            if (sgn(b) == 0) return QuadExt(a);
            return QuadExt(a, b, d);
        };
        Splitting s;
        try {
            s.L1 = Lattice(Vec2(QuadExt(1), QuadExt(0)), Vec2(q(true), QuadExt(1) + q(true).abs()));
            s.L2 = Lattice(Vec2(QuadExt(1), q(false)), Vec2(q(false), QuadExt(1) + q(false).abs()));
            s.w = Vec2(q(true), QuadExt(1) + q(true).abs());
            s.stratum = Stratum::H11;
        } catch (const Error&) {
            continue;
        }
        if (!validate(s).ok()) continue;

        // search small primitive pairs
        std::optional<PartnerPair> pair;
        for (long a = -3; a <= 3 && !pair; ++a)
            for (long b = -3; b <= 3 && !pair; ++b)
                for (long c = -3; c <= 3 && !pair; ++c)
                    for (long e = -3; e <= 3 && !pair; ++e) {
                        Vec2 v1 = QuadExt(a) * s.L1.b1 + QuadExt(b) * s.L1.b2;
                        Vec2 v2 = QuadExt(c) * s.L2.b1 + QuadExt(e) * s.L2.b2;
                        if (!is_primitive(s.L1, v1) || !is_primitive(s.L2, v2)) continue;
                        try {
                            PartnerPair cand = make_partner_pair(s, v1, v2);
                            if (twist_allowed(s, cand, 1) || twist_allowed(s, cand, -1))
                                pair = cand;
                        } catch (const Error&) {
                        }
                    }
        if (!pair) continue;
        long k = twist_allowed(s, *pair, 1) ? 1 : -1;
        if (rng() % 2 && twist_allowed(s, *pair, 2 * k)) k *= 2;

        TwistResult r = apply_twist(s, *pair, k);
        ++done;

        // area conservation
        CHECK(r.s.total_area() == s.total_area());
        // area step = +k*cross(v1,v2) under the orientation normalization
        CHECK(r.s.area1() - s.area1() == QuadExt(k) * cross(pair->v1, pair->v2));
        // area bound
        QuadExt step = (r.s.area1() - s.area1()).abs();
        CHECK(step <= r.cert.exchanged_area_bound);
        CHECK(r.cert.exchanged_area_bound <= exchanged_area_bound_loose(s, r.cert));
        // involution
        TwistResult back = apply_twist(r.s, *pair, -k);
        CHECK(back.s == s);
    }
    CHECK(done == 150);
}

TEST_CASE("choose_irrational_twist") {
    // parallel pair on the demo splitting: unbounded twists, k=1 already irrational
    Splitting s;
    s.L1 = z2();
    s.L2 = z2();
    s.w = Vec2(QuadExt(1), r2());
    s.stratum = Stratum::H11;
    PartnerPair p = make_partner_pair(s, V(5, 7), V(5, 7));
    CHECK(max_twists(s, p).unbounded);
    IrrationalTwist it = choose_irrational_twist(s, p);
    CHECK(it.k == 1);
    CHECK(it.result.cert.irrational_in_L1_after);

    // rational input violates the precondition
    Splitting t = paper_example();
    PartnerPair q = make_partner_pair(t, V(1, 0), V(4, 1));
    CHECK_THROWS_AS(choose_irrational_twist(t, q), Error);
}

TEST_CASE("three-twist irrationality propagation on random splittings") {
    std::mt19937_64 rng(99001122u);
    std::uniform_int_distribution<long> pick(1, 9);
    int done = 0, attempts = 0;
    while (done < 60 && ++attempts < 5000) {
        long d = std::array<long, 2>{2, 5}[rng() % 2];
        // w = (1, y) with y = q + (r/s)*sqrt(d): irrational in Z^2
        mpq_class rs(pick(rng), pick(rng));
        rs.canonicalize();
        Splitting s;
        s.L1 = z2();
        s.L2 = z2();
        s.w = Vec2(QuadExt(1), QuadExt(mpq_class(pick(rng)), rs, d));
        s.stratum = Stratum::H11;
        if (!validate(s).ok() || is_rational_in(s, 1)) continue;

        // v1 = (1, floor(y)) has |cross(v1,w)| = frac(y) in (0,1); the parallel
        // partner gives unbounded twists
        Vec2 v1{QuadExt(1), QuadExt(mpz_class(s.w.y.floor()))};
        if (cross(v1, s.w).is_zero()) continue;
        PartnerPair pair = make_partner_pair(s, v1, v1);
        REQUIRE(max_twists(s, pair).at_least(3));
        IrrationalTwist it = choose_irrational_twist(s, pair); // throws on lemma violation
        CHECK(it.result.cert.irrational_in_L1_after);
        ++done;
    }
    CHECK(done == 60);
}

TEST_CASE("slope and rotation on the worked example") {
    Splitting s = paper_example();
    PartnerPair p = make_partner_pair(s, V(1, 0), V(3, -1));

    SlopeRotation sr1 = slope_and_rotation(s, p, -1);
    CHECK(sr1.sigma == QuadExt::rational(-1, 2));
    CHECK(sr1.rho == QuadExt(-2));

    SlopeRotation sr2 = slope_and_rotation(s, p, -2);
    CHECK(sr2.sigma == QuadExt::rational(-3, 8));
    CHECK(sr2.rho == QuadExt::rational(-8, 3));

    // sigma matches the direct slope of w^k in the normalized frame
    for (long k : {-1L, -2L}) {
        Vec2 wk = s.w + QuadExt(k) * (p.v1 + p.v2);
        auto [a, b] = Lattice(p.v1, s.w).coords(wk); // frame coordinates
        SlopeRotation sr = slope_and_rotation(s, p, k);
        CHECK(sr.sigma == b / a);
    }

    // sigma = 0 at k with 1 + k*cross(v1,v2) = 0: here cross = -1, so k = 1
    CHECK_THROWS_AS(slope_and_rotation(s, p, 1), Error);
}

TEST_CASE("initial irrational search") {
    ExampleSplitting pn = build_example("prop-new");
    InitialSearchResult res = initial_irrational_search(pn.s, *pn.v1, *pn.v2, *pn.v2p);
    REQUIRE(std::holds_alternative<VeechCertificate>(res));
    const auto& cert = std::get<VeechCertificate>(res);
    CHECK(cert.all_rational);
    CHECK(cert.theta == QuadExt(-1));
    CHECK(cert.v0w == QuadExt(0));

    ExampleSplitting pp = build_example("prop-new-perturbed");
    InitialSearchResult res2 = initial_irrational_search(pp.s, *pp.v1, *pp.v2, *pp.v2p);
    REQUIRE(std::holds_alternative<FoundIrrational>(res2));
    const auto& found = std::get<FoundIrrational>(res2);
    CHECK(found.k == -1);
    CHECK(found.which_partner == 2);
    auto [a, b] = found.s.L1.coords(found.s.w);
    CHECK(a / b == QuadExt(-2) - QuadExt(2) * r2());

    // v2 - v2' parallel to w violates the precondition (v2' = v2 makes it zero)
    Splitting s = pn.s;
    CHECK_THROWS_AS(initial_irrational_search(s, V(1, 0), V(3, -1), V(3, -1)), Error);
}
