#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slitsurf/geom.hpp"

namespace slitsurf {

enum class Stratum { H11, H2 };

inline const char* stratum_name(Stratum s) { return s == Stratum::H11 ? "H11" : "H2"; }

/// Presentation of a genus-2 surface as two flat tori glued along slits of
/// common holonomy w. In H2 the second torus is a degenerate cylinder and w
/// is a primitive vector of L2.
struct Splitting {
    Lattice L1, L2;
    Vec2 w;
    Stratum stratum = Stratum::H11;

    QuadExt area1() const { return L1.coarea(); }
    QuadExt area2() const { return L2.coarea(); }
    QuadExt total_area() const { return area1() + area2(); }

    friend bool operator==(const Splitting& a, const Splitting& b) {
        return a.stratum == b.stratum && a.w == b.w && a.L1.same_lattice(b.L1) &&
               a.L2.same_lattice(b.L2);
    }
};

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidityReport {
    std::vector<Check> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const;
};

ValidityReport validate(const Splitting& s);

// True iff w is a scalar multiple of a lattice vector of L_i (i is 1 or 2).
bool is_rational_in(const Splitting& s, int i);
bool is_irrational(const Splitting& s);

/// Canonical cylinder data on the L1 side: {v1, u1} a unimodular basis with
/// cross(v1,u1) = +coarea, u1 translated so the v1-offset of v0 = u1 - w lies
/// in [0,1); theta_cyl = cross(v0, v1) < 0 is minus the cylinder height times |v1|.
struct CylinderFrame {
    Vec2 v1, u1, v0;
    QuadExt theta_cyl;
};

CylinderFrame cylinder_frame(const Splitting& s, const Vec2& v1);

// Internal completion shared with the twist surgery; theta may be zero when
// |cross(v,w)| equals the coarea (degenerate cylinder, e.g. the H2 side).
CylinderFrame basis_completion(const Lattice& L, const Vec2& v, const Vec2& w, bool allow_zero_theta);

struct ExampleSplitting {
    Splitting s;
    std::optional<Vec2> v1, v2, v2p;
};

// Built-in example splittings: "prop-new", "prop-new-perturbed",
// "slit-torus" (takes alpha), "demo-irrational", "demo-h2".
ExampleSplitting build_example(const std::string& name,
                               const std::optional<QuadExt>& alpha = std::nullopt);

} // namespace slitsurf
