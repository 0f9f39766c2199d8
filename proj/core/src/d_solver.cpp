#include <cmath>
#include <stdexcept>

#include <gmpxx.h>
#include <mpfr.h>

#include "canvas_forge/surgery.hpp"

namespace canvas_forge {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Decides 2^a > b exactly.
bool pow2_exceeds(const mpq_class& a, const mpq_class& b) {
  if (sgn(b) <= 0) return true;
  if (a.get_den() == 1) {
    const mpz_class& e = a.get_num();
    if (!e.fits_slong_p()) return sgn(e) > 0;
    const long k = e.get_si();
    mpz_class lhs = b.get_den(), rhs = b.get_num();
    if (k >= 0) mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    else mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
    return lhs > rhs;
  }
  // Non-integer rational exponent: 2^a is irrational, so the bounds separate eventually.
  for (mpfr_prec_t prec = 64; prec <= (1 << 20); prec *= 2) {
    Mpfr alo(prec), ahi(prec), lo(prec), hi(prec), blo(prec), bhi(prec);
    mpfr_set_q(alo.get(), a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(ahi.get(), a.get_mpq_t(), MPFR_RNDU);
    mpfr_exp2(lo.get(), alo.get(), MPFR_RNDD);
    mpfr_exp2(hi.get(), ahi.get(), MPFR_RNDU);
    mpfr_set_q(blo.get(), b.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(bhi.get(), b.get_mpq_t(), MPFR_RNDU);
    if (mpfr_greater_p(lo.get(), bhi.get())) return true;
    if (mpfr_lessequal_p(hi.get(), blo.get())) return false;
  }
  throw std::logic_error("exact comparison did not separate");
}

double pow2_minus(const mpq_class& a, const mpq_class& b) {
  Mpfr x(128), y(128);
  mpfr_set_q(x.get(), a.get_mpq_t(), MPFR_RNDN);
  mpfr_exp2(x.get(), x.get(), MPFR_RNDN);
  mpfr_set_q(y.get(), b.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(x.get(), x.get(), y.get(), MPFR_RNDN);
  return mpfr_get_d(x.get(), MPFR_RNDN);
}

mpq_class exact(double c, const char* name) {
  if (!std::isfinite(c) || c < 1.0) throw ArgumentError(std::string(name) + " must be a finite real >= 1");
  mpq_class q(c);
  q.canonicalize();
  return q;
}

bool holds(long long d, const mpq_class& c1, const mpq_class& c2) {
  const mpq_class dd(mpz_class(std::to_string(d)));
  mpq_class a = (dd - 4 - 204 * c1) / (32 * c1 * c2);
  mpq_class b = (dd - 4) / (4 * c1);
  a.canonicalize();
  b.canonicalize();
  return pow2_exceeds(a, b);
}

}  // namespace

bool d_inequality_holds(long long d, double c1, double c2) {
  return holds(d, exact(c1, "c1"), exact(c2, "c2"));
}

DSolution solve_D_inequality(double c1d, double c2d) {
  const mpq_class c1 = exact(c1d, "c1"), c2 = exact(c2d, "c2");
  DSolution out;
  mpq_class floor_value = 720 * c1 * c2 * c2;
  floor_value.canonicalize();
  mpz_class ceil_value;
  mpz_cdiv_q(ceil_value.get_mpz_t(), floor_value.get_num_mpz_t(), floor_value.get_den_mpz_t());
  if (mpz_odd_p(ceil_value.get_mpz_t())) ++ceil_value;
  if (!ceil_value.fits_slong_p()) throw ArgumentError("720 c1 c2^2 is out of range");
  out.floor_even = ceil_value.get_si();

  out.d = out.floor_even;
  while (!holds(out.d, c1, c2)) out.d += 2;

  // The gap between 2^a and b is convex in D, so the failing even values form one run.
  long long last_false = 0;
  for (long long d = 2;; d += 2) {
    if (!holds(d, c1, c2)) last_false = d;
    else if (last_false > 0) break;
  }
  out.inequality_threshold = last_false + 2;

  mpq_class dprime = (mpq_class(mpz_class(std::to_string(out.d))) - 4) / (4 * c1) - 35;
  dprime.canonicalize();
  mpq_class exponent = (dprime - 16) / (8 * c2);
  mpq_class rhs = 35 + dprime;
  exponent.canonicalize();
  rhs.canonicalize();
  out.f_positive = pow2_exceeds(exponent, rhs);
  out.d_prime_bound = dprime >= 144 * c2 * c2;
  out.f_value = pow2_minus(exponent, rhs);
  return out;
}

}  // namespace canvas_forge
