#ifndef RAMSEY_BOUNDS_HPP
#define RAMSEY_BOUNDS_HPP

#include <gmpxx.h>

namespace ramsey {

// (2^(7d+8) d^(3d+2) Delta)^(log2 q) * n. Exact big-integer value when q is a
// power of two; otherwise the ceiling of the (irrational) value via MPFR.
mpz_class ramsey_bound_grr(long d, long delta_cap, long q, const mpz_class& n);

// ceil(2^(c_exp q 3^q d / delta) * Delta^(c_delta delta) * n) for rational
// delta in (0,1]; exact when both exponents are integers. The defaults follow
// the proof-text instantiation (25 and 4).
mpz_class ramsey_bound_general(long d, long delta_cap, long q, const mpz_class& n,
                               const mpq_class& delta, long c_exp = 25, long c_delta = 4);

// The specialization delta = 1/sqrt(log2 Delta); requires Delta >= 2.
mpz_class ramsey_bound_sqrt_log(long d, long delta_cap, long q, const mpz_class& n,
                                long c_exp = 25, long c_delta = 4);

}  // namespace ramsey

#endif
