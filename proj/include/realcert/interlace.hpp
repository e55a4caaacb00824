#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realcert/matrix.hpp"
#include "realcert/multipoly.hpp"
#include "realcert/realroots.hpp"

namespace realcert {

// A morphism P^1 -> P^1 given by two same-degree binary forms without a
// common projective zero (checked on construction via the resultant).
class RationalMapP1 {
public:
    RationalMapP1(HomForm f, HomForm g);
    const HomForm& f() const { return f_; }
    const HomForm& g() const { return g_; }
    int degree() const { return f_.degree(); }

private:
    HomForm f_, g_;
};

enum class PairVerdict { RealFiberedInterlacing, CommonZero, NotRealFibered };

struct PairClassification {
    PairVerdict verdict = PairVerdict::NotRealFibered;
    SignatureResult bezout_signature;
    // Present for NotRealFibered: a pencil member lambda*f + mu*g that is not
    // real-rooted, with its certificate.
    std::optional<std::pair<Rational, Rational>> witness;
    std::optional<RealRootCertificate> witness_certificate;
    int sampled_members = 0;
    bool real_fibered() const { return verdict == PairVerdict::RealFiberedInterlacing; }
};

// The homogeneous Bezoutian B of two degree-n binary forms, basis ordered by
// descending powers of s:
//   f(s,t) g(u,v) - f(u,v) g(s,t)
//     = (sv - tu) * sum_{i,j} B[i][j] s^(n-1-i) t^i u^(n-1-j) v^j.
SymMatrix bezoutian(const HomForm& f, const HomForm& g);
// Same matrix in the reversed (ascending-s) basis order.
SymMatrix bezoutian_ascending(const HomForm& f, const HomForm& g);

// Deterministic pencil parameters: (1,0), (0,1), then reduced fractions
// (p : q) with |p| <= 7, 1 <= q <= 7, ordered by (q, p).
const std::vector<std::pair<long, long>>& pencil_grid();

// Interlacing decided by definiteness of the Bezoutian, then cross-validated
// on every grid member; a disagreement between the certificate and the
// samples is raised as an error rather than patched over.
PairClassification classify_pair(const RationalMapP1& m);
// Entry point for raw coefficient data where CommonZero is reachable.
PairClassification classify_raw(const HomForm& f, const HomForm& g);

RationalMapP1 compose(const RationalMapP1& outer, const RationalMapP1& inner);

// Degree-k self-map of P^1 conjugating z -> z^k by the Cayley transform
// (z - i)/(z + i); the imaginary parts cancel and the result is rational:
// (Re (s + it)^k : Im (s + it)^k).
RationalMapP1 mobius_power_map(int k);

struct RealProjectivePoint {
    bool at_infinity = false;  // the point (1 : 0)
    RootLoc affine;            // chart t = 1, coordinate s
};

// Real zeros of the ramification form f_s g_t - f_t g_s, as isolating data in
// the chart t = 1 plus an exact flag for (1 : 0).
std::vector<RealProjectivePoint> real_ramification(const RationalMapP1& m);

}  // namespace realcert
