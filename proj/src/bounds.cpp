#include "ramsey/bounds.hpp"

#include <mpfr.h>

#include <bit>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

void require_basics(long d, long delta_cap, long q) {
  if (d < 1) throw std::invalid_argument("ramsey bound: d must be >= 1");
  if (delta_cap < 1) throw std::invalid_argument("ramsey bound: Delta must be >= 1");
  if (q < 1) throw std::invalid_argument("ramsey bound: q must be >= 1");
  if (d > 4096 || q > 24 || delta_cap > (1L << 40))
    throw std::invalid_argument("ramsey bound: parameters out of supported range");
}

mpz_class mpfr_ceil_to_mpz(mpfr_t value) {
  mpfr_ceil(value, value);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value, MPFR_RNDN);
  return out;
}

}  // namespace

mpz_class ramsey_bound_grr(long d, long delta_cap, long q, const mpz_class& n) {
  require_basics(d, delta_cap, q);
  if (n < 0) throw std::invalid_argument("ramsey bound: n must be >= 0");
  if (q == 1) return n;  // exponent log 1 = 0
  mpz_class base = 1;
  mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), static_cast<mp_bitcnt_t>(7 * d + 8));
  mpz_class dpow;
  mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(3 * d + 2));
  base *= dpow;
  base *= delta_cap;
  if ((q & (q - 1)) == 0) {
    int k = std::countr_zero(static_cast<unsigned long>(q));
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    return out * n;
  }
  // irrational exponent: ceiling at generous precision
  size_t base_bits = mpz_sizeinbase(base.get_mpz_t(), 2);
  long prec = static_cast<long>(base_bits) * 6 + 256;
  if (prec > (1L << 22)) throw std::invalid_argument("ramsey_bound_grr: parameters too large");
  mpfr_t b, logq, r;
  mpfr_inits2(prec, b, logq, r, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(b, base.get_mpz_t(), MPFR_RNDN);
  mpfr_log2(b, b, MPFR_RNDN);
  mpfr_set_ui(logq, static_cast<unsigned long>(q), MPFR_RNDN);
  mpfr_log2(logq, logq, MPFR_RNDN);
  mpfr_mul(b, b, logq, MPFR_RNDN);
  mpfr_exp2(r, b, MPFR_RNDN);
  mpfr_t nn;
  mpfr_init2(nn, prec);
  mpfr_set_z(nn, n.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(r, r, nn, MPFR_RNDN);
  mpz_class out = mpfr_ceil_to_mpz(r);
  mpfr_clears(b, logq, r, nn, static_cast<mpfr_ptr>(nullptr));
  return out;
}

mpz_class ramsey_bound_general(long d, long delta_cap, long q, const mpz_class& n,
                               const mpq_class& delta, long c_exp, long c_delta) {
  require_basics(d, delta_cap, q);
  if (n < 0) throw std::invalid_argument("ramsey bound: n must be >= 0");
  if (delta <= 0 || delta > 1)
    throw std::invalid_argument("ramsey_bound_general: delta out of (0,1]");
  if (c_exp < 1 || c_delta < 0) throw std::invalid_argument("ramsey_bound_general: bad constants");
  mpz_class three_q;
  mpz_ui_pow_ui(three_q.get_mpz_t(), 3, static_cast<unsigned long>(q));
  // e1 = c_exp * q * 3^q * d / delta,  e2 = c_delta * delta
  mpq_class e1 = mpq_class(three_q) * c_exp * q * d / delta;
  mpq_class e2 = mpq_class(c_delta) * delta;
  e1.canonicalize();
  e2.canonicalize();
  if (e1.get_num() > (1L << 24) * e1.get_den())
    throw std::invalid_argument("ramsey_bound_general: exponent too large");
  if (e1.get_den() == 1 && e2.get_den() == 1) {
    mpz_class out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e1.get_num().get_ui()));
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(delta_cap),
                  e2.get_num().get_ui());
    return out * dp * n;
  }
  long e1_approx = static_cast<long>(mpq_class(e1).get_d());
  long prec = e1_approx + 512;
  if (prec > (1L << 24)) throw std::invalid_argument("ramsey_bound_general: exponent too large");
  mpfr_t e, r, tmp;
  mpfr_inits2(prec, e, r, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(e, e1.get_mpq_t(), MPFR_RNDN);
  mpfr_exp2(r, e, MPFR_RNDN);
  // Delta^(e2) = 2^(e2 log2 Delta)
  mpfr_set_ui(tmp, static_cast<unsigned long>(delta_cap), MPFR_RNDN);
  mpfr_log2(tmp, tmp, MPFR_RNDN);
  mpfr_t e2f;
  mpfr_init2(e2f, prec);
  mpfr_set_q(e2f, e2.get_mpq_t(), MPFR_RNDN);
  mpfr_mul(tmp, tmp, e2f, MPFR_RNDN);
  mpfr_exp2(tmp, tmp, MPFR_RNDN);
  mpfr_mul(r, r, tmp, MPFR_RNDN);
  mpfr_set_z(tmp, n.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(r, r, tmp, MPFR_RNDN);
  mpz_class out = mpfr_ceil_to_mpz(r);
  mpfr_clears(e, r, tmp, e2f, static_cast<mpfr_ptr>(nullptr));
  return out;
}

mpz_class ramsey_bound_sqrt_log(long d, long delta_cap, long q, const mpz_class& n,
                                long c_exp, long c_delta) {
  require_basics(d, delta_cap, q);
  if (delta_cap < 2)
    throw std::invalid_argument("ramsey_bound_sqrt_log: Delta must be >= 2 (log2 Delta = 0)");
  if (n < 0) throw std::invalid_argument("ramsey bound: n must be >= 0");
  mpz_class three_q;
  mpz_ui_pow_ui(three_q.get_mpz_t(), 3, static_cast<unsigned long>(q));
  // total exponent: sqrt(log2 Delta) * (c_exp q 3^q d + c_delta)
  mpz_class coeff = three_q * c_exp * q * d + c_delta;
  if (coeff > (1L << 24)) throw std::invalid_argument("ramsey_bound_sqrt_log: exponent too large");
  long prec = static_cast<long>(coeff.get_ui()) * 8 + 512;
  if (prec > (1L << 24)) throw std::invalid_argument("ramsey_bound_sqrt_log: exponent too large");
  mpfr_t lg, e, r;
  mpfr_inits2(prec, lg, e, r, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(lg, static_cast<unsigned long>(delta_cap), MPFR_RNDN);
  mpfr_log2(lg, lg, MPFR_RNDN);
  mpfr_sqrt(lg, lg, MPFR_RNDN);
  mpfr_set_z(e, coeff.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(e, e, lg, MPFR_RNDN);
  mpfr_exp2(r, e, MPFR_RNDN);
  mpfr_t nn;
  mpfr_init2(nn, prec);
  mpfr_set_z(nn, n.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(r, r, nn, MPFR_RNDN);
  mpz_class out = mpfr_ceil_to_mpz(r);
  mpfr_clears(lg, e, r, nn, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace ramsey
