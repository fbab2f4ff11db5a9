#pragma once

#include <optional>
#include <variant>

#include "slitsurf/splitting.hpp"

namespace slitsurf {

/// Pair of primitive vectors (v1 in L1, v2 in L2), sign-normalized so both
/// cross products with w are positive, with |cross(v_i,w)| <= A_i (equality
/// forced on side 2 for H2). Determines the twisting curve.
struct PartnerPair {
    Vec2 v1, v2;
};

struct TwistCertificate {
    PartnerPair pair;
    long k = 0;
    Vec2 w_new;
    QuadExt exchanged_area_bound; // |v1 x w| + |v1 x w'|
    bool irrational_in_L1_after = false;
};

PartnerPair make_partner_pair(const Splitting& s, Vec2 v1, Vec2 v2);

struct MaxTwists {
    bool unbounded = false;
    long n = 0;
    bool at_least(long m) const { return unbounded || n >= m; }
};

// Largest n with |v1 x v2| < max(|v1 x w|, |v2 x w|)/n; unbounded when the
// pair is parallel.
MaxTwists max_twists(const Splitting& s, const PartnerPair& pair);

bool twist_allowed(const Splitting& s, const PartnerPair& pair, long k);

struct TwistResult {
    Splitting s;
    TwistCertificate cert;
};

// Dehn twist about the pair's curve: w' = w + k(v1+v2), lattices updated by
// keeping the cylinders fixed. Validates the result.
TwistResult apply_twist(const Splitting& s, const PartnerPair& pair, long k);

QuadExt exchanged_area_bound(const TwistCertificate& cert);
// 2|v1 x w| + |k||v1 x v2|, the coarser bound.
QuadExt exchanged_area_bound_loose(const Splitting& s, const TwistCertificate& cert);

struct IrrationalTwist {
    long k;
    TwistResult result;
};

// First k in {1,2,3} (or the negative ladder) whose twist is irrational in
// the new L1. Requires an irrational-in-L1 input with at least 3 twists.
IrrationalTwist choose_irrational_twist(const Splitting& s, const PartnerPair& pair);

struct SlopeRotation {
    QuadExt sigma;
    QuadExt rho;
};

// Slope of w^k and the first-return rotation number, computed in the frame
// sending v1 to (1,0) and w to (0,1). Throws SigmaZero when the slope
// vanishes (rho undefined there).
SlopeRotation slope_and_rotation(const Splitting& s, const PartnerPair& pair, long k);

struct VeechCertificate {
    QuadExt theta, v0w, v1v2, v1v2p, v2w, v2pw; // normalized-frame quantities
    bool all_rational = false;
};

struct FoundIrrational {
    long k = 0;
    int which_partner = 2; // 2 or 2' (encoded 2 / 3)
    Splitting s;
};

using InitialSearchResult = std::variant<FoundIrrational, VeechCertificate>;

// Four-twist initial search on a rational-in-both splitting: two allowed
// twists per partner. Returns the first irrational splitting, or the
// certificate of normalized-frame rational data when every twist stays
// rational (torus-cover case).
InitialSearchResult initial_irrational_search(const Splitting& s, const Vec2& v1, const Vec2& v2,
                                              const Vec2& v2p);

} // namespace slitsurf
