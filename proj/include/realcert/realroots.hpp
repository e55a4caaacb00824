#pragma once

#include "realcert/matrix.hpp"
#include "realcert/unipoly.hpp"

namespace realcert {

enum class RootVerdict { AllRealRoots, NotAllReal };
enum class RootMethod { Sturm, Hermite };

struct RealRootCertificate {
    RootVerdict verdict = RootVerdict::NotAllReal;
    int distinct_real_roots = 0;
    int distinct_complex_roots = 0;
    RootMethod method = RootMethod::Sturm;
    bool all_real() const { return verdict == RootVerdict::AllRealRoots; }
};

// Hankel matrix of power sums s_0 .. s_{2n-2} of the roots of a monic p,
// computed with Newton's identities. rank = #distinct complex roots,
// signature difference = #distinct real roots.
SymMatrix hermite_matrix(const UniPoly& p);

// Both certificates agree by classical theory; the Sturm route drives the
// verdict and the Hermite route is recomputed as a cross-check.
RealRootCertificate is_real_rooted(const UniPoly& p);

// p(t) >= 0 for all real t, decided exactly via the squarefree decomposition:
// positive leading coefficient, even degree, no odd-multiplicity real root.
bool nonneg_on_reals(const UniPoly& p);

}  // namespace realcert
