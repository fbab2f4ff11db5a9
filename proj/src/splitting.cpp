#include "slitsurf/splitting.hpp"

#include <sstream>

namespace slitsurf {

std::string ValidityReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

namespace {

// Decides whether some real s in (0,1] puts s*w inside L, given the exact
// lattice coordinates of w. Equivalent to: (alpha,beta) is a real multiple
// t*(m,n) of a primitive integer vector with |t| >= 1.
bool scaled_copy_in_lattice(const QuadExt& alpha, const QuadExt& beta) {
    bool ra = alpha.is_rational(), rb = beta.is_rational();
    if (ra && rb) {
        // content of the rational vector: alpha = c*m, beta = c*n with gcd(m,n)=1
        if (alpha.is_zero() && beta.is_zero()) return true;
        mpq_class qa = alpha.a(), qb = beta.a();
        mpz_class num_g, den_l;
        mpz_class na = qa.get_num(), da = qa.get_den();
        mpz_class nb = qb.get_num(), db = qb.get_den();
        // content = gcd(na*db, nb*da) / (da*db)
        mpz_class x = na * db, y = nb * da;
        mpz_gcd(num_g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        den_l = da * db;
        mpq_class content(num_g, den_l);
        content.canonicalize();
        return content >= 1;
    }
    // Irrational coordinates: a real multiple of an integer vector exists iff
    // the ratio is rational (or one coordinate is zero).
    if (alpha.is_zero()) return beta.abs() >= QuadExt(1);
    if (beta.is_zero()) return alpha.abs() >= QuadExt(1);
    QuadExt ratio = beta / alpha; // = n/m when parallel to primitive (m,n)
    if (!ratio.is_rational()) return false;
    mpq_class r = ratio.a();
    mpz_class m = r.get_den(); // reduced: beta/alpha = n/m with gcd(m,n)=1
    // (alpha,beta) = t*(m,n) with t = alpha/m; fails to embed iff |t| >= 1.
    return alpha.abs() >= QuadExt(m);
}

} // namespace

ValidityReport validate(const Splitting& s) {
    ValidityReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    add("w nonzero", !s.w.is_zero());
    bool l1ok = !cross(s.L1.b1, s.L1.b2).is_zero();
    bool l2ok = !cross(s.L2.b1, s.L2.b2).is_zero();
    add("L1 nondegenerate", l1ok);
    add("L2 nondegenerate", l2ok);
    if (s.w.is_zero() || !l1ok || !l2ok) return rep;

    add("area1 positive", s.area1().sign() > 0);
    add("area2 positive", s.area2().sign() > 0);

    if (s.stratum == Stratum::H11) {
        for (int i = 1; i <= 2; ++i) {
            const Lattice& L = (i == 1) ? s.L1 : s.L2;
            auto [a, b] = L.coords(s.w);
            bool embeds = !scaled_copy_in_lattice(a, b);
            add("slit embeds in T" + std::to_string(i), embeds,
                embeds ? "" : "some s in (0,1] puts s*w in the lattice");
        }
    } else {
        bool in_l2 = s.L2.contains(s.w);
        add("w in L2", in_l2);
        add("w primitive in L2", in_l2 && is_primitive(s.L2, s.w));
    }
    return rep;
}

bool is_rational_in(const Splitting& s, int i) {
    if (i != 1 && i != 2) fail(Err::Precondition, "torus index must be 1 or 2");
    const Lattice& L = (i == 1) ? s.L1 : s.L2;
    auto [alpha, beta] = L.coords(s.w);
    if (beta.is_zero() || alpha.is_zero()) return true;
    return (alpha / beta).is_rational();
}

bool is_irrational(const Splitting& s) { return !is_rational_in(s, 1) || !is_rational_in(s, 2); }

CylinderFrame basis_completion(const Lattice& L, const Vec2& v, const Vec2& w,
                               bool allow_zero_theta) {
    if (!is_primitive(L, v)) fail(Err::NotPrimitive, "completion base vector must be primitive");
    QuadExt c = cross(v, w);
    if (c.is_zero()) fail(Err::ParallelToW, "base vector parallel to w");

    auto [pa, qa] = L.coords(v);
    mpz_class p = pa.a().get_num(), q = qa.a().get_num();
    auto [r, sc] = unimodular_complement(p, q);
    Vec2 u = QuadExt(r) * L.b1 + QuadExt(sc) * L.b2;
    // Orient so cross(v, u) = +coarea; then theta = cross(v,w) - coarea <= 0
    // whenever the cylinder exists on the w-side of v.
    QuadExt A = L.coarea();
    if (cross(v, u).sign() < 0) u = -u;
    QuadExt theta = cross(u - w, v); // = c - A after orientation when c > 0
    if (theta.sign() > 0) {
        // w on the other side; the opposite orientation is the geometric one.
        u = -u;
        theta = cross(u - w, v);
    }
    if (theta.sign() > 0) fail(Err::FrameImpossible, "no completion with nonpositive theta");
    if (!allow_zero_theta && theta.sign() == 0)
        fail(Err::FrameImpossible, "cylinder has zero height (|cross(v,w)| = coarea)");

    // Canonical translate: v0 = u - w with v1-offset in [0,1).
    Vec2 v0 = u - w;
    QuadExt off = cross(v0, w) / c;
    mpz_class t = off.floor();
    if (t != 0) u = u - QuadExt(t) * v;
    v0 = u - w;

    CylinderFrame f;
    f.v1 = v;
    f.u1 = u;
    f.v0 = v0;
    f.theta_cyl = cross(v0, v);
    return f;
}

CylinderFrame cylinder_frame(const Splitting& s, const Vec2& v1) {
    return basis_completion(s.L1, v1, s.w, false);
}

ExampleSplitting build_example(const std::string& name, const std::optional<QuadExt>& alpha) {
    auto z2 = []() { return Lattice(Vec2(QuadExt(1), QuadExt(0)), Vec2(QuadExt(0), QuadExt(1))); };
    ExampleSplitting ex;
    if (name == "prop-new" || name == "prop-new-perturbed") {
        QuadExt second_y = (name == "prop-new") ? QuadExt(2) : QuadExt(2) + QuadExt::sqrt_of(2);
        ex.s.L1 = Lattice(Vec2(QuadExt(1), QuadExt(0)), Vec2(QuadExt(0), second_y));
        ex.s.L2 = Lattice(Vec2(QuadExt(3), QuadExt(-1)), Vec2(QuadExt(4), QuadExt(1)));
        ex.s.w = Vec2(QuadExt(0), QuadExt(1));
        ex.s.stratum = Stratum::H11;
        ex.v1 = Vec2(QuadExt(1), QuadExt(0));
        ex.v2 = Vec2(QuadExt(3), QuadExt(-1));
        ex.v2p = Vec2(QuadExt(4), QuadExt(1));
        return ex;
    }
    if (name == "slit-torus") {
        QuadExt a = alpha.value_or(QuadExt::sqrt_of(2) - QuadExt(1));
        if (a.sign() <= 0 || (a - QuadExt(1)).sign() >= 0)
            fail(Err::Precondition, "slit-torus needs 0 < alpha < 1");
        ex.s.L1 = z2();
        ex.s.L2 = z2();
        ex.s.w = Vec2(QuadExt(0), a);
        ex.s.stratum = Stratum::H11;
        ex.v1 = Vec2(QuadExt(1), QuadExt(0));
        ex.v2 = Vec2(QuadExt(1), QuadExt(0));
        return ex;
    }
    if (name == "demo-irrational") {
        ex.s.L1 = z2();
        ex.s.L2 = z2();
        ex.s.w = Vec2(QuadExt(1), QuadExt::sqrt_of(2));
        ex.s.stratum = Stratum::H11;
        return ex;
    }
    if (name == "demo-h2") {
        ex.s.L1 = z2();
        ex.s.L2 = Lattice(Vec2(QuadExt(0), QuadExt(1)), Vec2(QuadExt(1), QuadExt(0)));
        ex.s.w = Vec2(QuadExt(0), QuadExt(1));
        ex.s.stratum = Stratum::H2;
        return ex;
    }
    fail(Err::UnknownExample, "unknown example: " + name);
}

} // namespace slitsurf
