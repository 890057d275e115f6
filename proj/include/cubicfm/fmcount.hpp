#pragma once

#include <optional>
#include <set>

#include "cubicfm/hassett.hpp"

namespace cubicfm {

/// Thrown by the twisted operations when kappa does not fit d.
class invalid_kappa_error : public std::domain_error {
 public:
  explicit invalid_kappa_error(const std::string& what)
      : std::domain_error(what) {}
};

struct Factorization {
  long long n = 1;
  std::vector<std::pair<long long, int>> factors;  // primes increasing

  int exponent_of(long long p) const;
  std::size_t distinct_primes() const { return factors.size(); }
  std::size_t distinct_odd_primes() const;
};

/// Exact factorization by trial division (fine for n <= 10^12).
Factorization factorize(long long n);

long long euler_phi(long long n);

/// Number of Fourier-Mukai partners of a K3 surface of rank-one Picard group
/// with polarization of the given even degree 2n:
///   1 if degree is 2 or a power of two, 2^(h-1) if degree = 2 * odd part,
///   2^h if degree = 2^a * odd part with a >= 2; h = distinct odd primes.
long long oguiso_count(long long degree);

struct CountReport {
  long long d = 0;
  std::optional<long long> kappa;
  std::optional<long long> c;
  std::optional<long long> m;        // K3 partner count
  std::optional<long long> p_cubic;  // exact cubic partner count
  std::optional<long long> m_prime;  // twisted partner count of order kappa
  std::optional<long long> lower_bound_cubic;
  std::string branch;
  long long h = 0;  // distinct odd primes of d (untwisted) / of c/2 (twisted)
  bool closed_form_applies = false;  // hypotheses (b)/(b') hold
  std::optional<long long> closed_form;  // 2^(h-1) or 2^(h-2) when they do
};

/// Exact Fourier-Mukai partner count of the cubic: m partners if d = 2 mod 6,
/// ceil(m/2) if d = 0 mod 6, with m the K3 count for degree d.
CountReport cubic_fm_count(long long d);

/// c = d / kappa^2; requires kappa^2 | d and c even, c >= 2.
long long twisted_decomposition(long long d, long long kappa);

/// Twisted partner count of Brauer order kappa:
///   m' = phi(kappa)/2            if kappa > 2 and c = 2,
///   m' = phi(kappa) * 2^(h-1)    if kappa = 2 or c > 2,
/// with h = distinct primes of c/2 for c > 2, h = 1 for c = 2. The cubic gets
/// at least m' (d = 2 mod 6) or ceil(m'/2) (d = 0 mod 6) partners.
CountReport twisted_fm_count(long long d, long long kappa);

/// Isotropic elements of exact order r in the cyclic quadratic module
/// (Z/order_d, q(k) = k^2 * q_gen mod 2Z), by full enumeration.
std::set<long long> isotropic_elements(long long order_d, const mpq_class& q_gen,
                                       long long r);

/// Number of orbits of x -> -x on a negation-closed subset of Z/order_d.
long long isotropic_orbits_under_negation(const std::set<long long>& elements,
                                          long long order_d);

long long epsilon(long long r);

/// The generator q value of the cyclic group d(K_d^perp) as realized by the
/// complement in L0: -(2d-1)/(3d) for d = 2 mod 6, -(2d-9)/(3d) for
/// d = 0 mod 6 (requires 9 not dividing d).
mpq_class generator_q_value(long long d);

/// Counting formula evaluated in the rank-one generic regime: isotropy-orbit
/// enumeration times the double-coset factor of the single genus
/// representative <l> with l^2 = c. Agrees with twisted_fm_count exactly.
long long ma_bound_generic(long long d, long long kappa);

/// All kappa >= 2 with kappa^2 | d and d/kappa^2 even.
std::vector<long long> valid_kappas(long long d);

}  // namespace cubicfm
