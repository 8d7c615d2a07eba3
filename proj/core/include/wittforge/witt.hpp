// Decision procedures in the Witt ring: hyperbolicity, Witt equivalence,
// anisotropic kernels over F_p, and membership in I^a for a <= 3.
#pragma once

#include "wittforge/forms.hpp"

namespace wittforge {

/// Over Q: dimension 2m, signature 0, trivial signed discriminant, and
/// Hasse invariant equal to that of h^m, i.e. (-1,-1)_v^(m(m-1)/2), at every
/// place (dimension/signature/discriminant/Hasse classify forms over Q).
/// Over F_p: dimension even and trivial signed discriminant class.
bool is_hyperbolic(const DiagonalForm& q);

/// q1 ~ q2 iff q1 + (-q2) is hyperbolic.
bool witt_equivalent(const DiagonalForm& q1, const DiagonalForm& q2);

/// Explicit Witt decomposition over F_p: returns an anisotropic form of
/// dimension <= 2 Witt-equivalent to q, obtained by repeatedly finding an
/// isotropic vector by exhaustive search and splitting off the hyperbolic
/// plane it spans.
DiagonalForm anisotropic_kernel_fp(const DiagonalForm& q);

/// Membership of the Witt class of q in I^a, a in {0,..,3}.
/// a=0: always. a=1: even dimension. a=2: additionally trivial signed
/// discriminant. a=3: additionally the Witt-Clifford condition
/// s_v(q)*(-1,-1)_v^(m(m-1)/2) = +1 at every place (over Q); over F_p the
/// symbol data is empty and a=3 coincides with a=2.
bool ideal_membership(const DiagonalForm& q, int level);

}  // namespace wittforge
