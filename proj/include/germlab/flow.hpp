#pragma once

#include "germlab/action.hpp"
#include "germlab/formal.hpp"
#include "germlab/laurent.hpp"
#include "germlab/quasipoly.hpp"

#include <string>

namespace germlab {

/// The jet of F^t = e^{tv} with coefficients quasipolynomial in the symbolic
/// time. A nilpotent linear part makes the exponential series terminate on
/// the truncated algebra (polynomial coefficients); otherwise the linear
/// part must be lower-triangular as given and the coefficients are obtained
/// by solving the triangular ODE system.
FormalMap<Quasipolynomial> flow_symbolic(const FormalVectorField<Rational>& v,
                                         const std::string& time_symbol);

/// The flow evaluated at a fixed rational time; exponentials of the
/// eigenvalue lattice become exact units.
FormalMap<Laurent> flow_at(const FormalVectorField<Rational>& v, const Rational& time);

/// Rational-valued flow; only nilpotent generators stay inside the
/// rationals, anything else throws.
FormalMap<Rational> flow_at_rational(const FormalVectorField<Rational>& v,
                                     const Rational& time);

} // namespace germlab
