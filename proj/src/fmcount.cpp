#include "cubicfm/fmcount.hpp"

#include <numeric>

namespace cubicfm {

int Factorization::exponent_of(long long p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

std::size_t Factorization::distinct_odd_primes() const {
  std::size_t h = 0;
  for (const auto& [p, e] : factors)
    if (p % 2 == 1) ++h;
  return h;
}

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  long long m = n;
  for (long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (m > 1) f.factors.emplace_back(m, 1);
  return f;
}

long long euler_phi(long long n) {
  long long phi = n;
  for (const auto& [p, e] : factorize(n).factors) phi -= phi / p;
  return phi;
}

long long oguiso_count(long long degree) {
  if (degree < 2 || degree % 2 != 0)
    throw std::invalid_argument("oguiso_count: degree must be even, >= 2");
  Factorization f = factorize(degree);
  const std::size_t h = f.distinct_odd_primes();
  if (h == 0) return 1;  // degree = 2 or 2^a
  const int a = f.exponent_of(2);
  return a >= 2 ? (1LL << h) : (1LL << (h - 1));
}

namespace {

void require_k3(long long d) {
  if (has_associated_k3(d)) return;
  AdmissibilityReport rep = admissibility(d);
  std::string why = rep.reasons.empty() ? "no associated K3" : rep.reasons[0];
  throw inadmissible_error("d = " + std::to_string(d) + ": " + why);
}

void require_twisted_k3(long long d) {
  if (d % 9 == 0)
    throw inadmissible_error("d = " + std::to_string(d) +
                             ": 9 | d (condition (c) fails)");
  if (has_associated_twisted_k3(d)) return;
  AdmissibilityReport rep = admissibility(d);
  std::string why =
      rep.reasons.empty() ? "no associated twisted K3" : rep.reasons[0];
  throw inadmissible_error("d = " + std::to_string(d) + ": " + why);
}

}  // namespace

CountReport cubic_fm_count(long long d) {
  require_k3(d);
  CountReport r;
  r.d = d;
  r.m = oguiso_count(d);
  r.h = static_cast<long long>(factorize(d).distinct_odd_primes());
  if (d % 6 == 2) {
    r.p_cubic = *r.m;
    r.branch = "d=2 (mod 6): p = m";
    r.closed_form_applies = r.h > 1;  // condition (b)
    if (r.closed_form_applies) r.closed_form = 1LL << (r.h - 1);
  } else {
    r.p_cubic = (*r.m + 1) / 2;
    r.branch = "d=0 (mod 6): p = ceil(m/2)";
    r.closed_form_applies = r.h > 2;  // condition (b')
    if (r.closed_form_applies) r.closed_form = 1LL << (r.h - 2);
  }
  if (r.closed_form && *r.closed_form != *r.p_cubic)
    throw std::logic_error("cubic_fm_count: closed form disagrees");
  return r;
}

long long twisted_decomposition(long long d, long long kappa) {
  if (kappa < 2)
    throw invalid_kappa_error("twisted_decomposition: kappa must be >= 2");
  if (d % (kappa * kappa) != 0)
    throw invalid_kappa_error("twisted_decomposition: kappa^2 does not divide d");
  long long c = d / (kappa * kappa);
  if (c % 2 != 0)
    throw invalid_kappa_error("twisted_decomposition: c = d/kappa^2 is odd");
  return c;
}

CountReport twisted_fm_count(long long d, long long kappa) {
  require_twisted_k3(d);
  long long c = twisted_decomposition(d, kappa);
  CountReport r;
  r.d = d;
  r.kappa = kappa;
  r.c = c;
  r.h = c > 2 ? static_cast<long long>(factorize(c / 2).distinct_primes()) : 1;
  long long phi = euler_phi(kappa);
  if (kappa > 2 && c == 2) {
    r.m_prime = phi / 2;  // phi(kappa) * 2^(h-2) with h = 1
    r.branch = "kappa>2, c=2: m' = phi(kappa)/2";
  } else {
    r.m_prime = phi * (1LL << (r.h - 1));
    r.branch = "kappa=2 or c>2: m' = phi(kappa)*2^(h-1)";
  }
  r.lower_bound_cubic = d % 6 == 2 ? *r.m_prime : (*r.m_prime + 1) / 2;
  return r;
}

std::set<long long> isotropic_elements(long long order_d,
                                       const mpq_class& q_gen, long long r) {
  if (order_d < 1 || r < 1)
    throw std::invalid_argument("isotropic_elements: positive inputs required");
  std::set<long long> out;
  if (order_d % r != 0) return out;
  for (long long k = 0; k < order_d; ++k) {
    if (order_d / std::gcd(k, order_d) != r) continue;
    if (mod2(mpq_class(static_cast<long>(k)) * static_cast<long>(k) * q_gen) == 0)
      out.insert(k);
  }
  return out;
}

long long isotropic_orbits_under_negation(const std::set<long long>& elements,
                                          long long order_d) {
  for (long long x : elements)
    if (!elements.count((order_d - x) % order_d))
      throw std::invalid_argument(
          "isotropic_orbits_under_negation: set not closed under negation");
  long long orbits = 0;
  for (long long x : elements) {
    long long nx = (order_d - x) % order_d;
    if (x <= nx) ++orbits;  // count each {x, -x} pair once
  }
  return orbits;
}

long long epsilon(long long r) {
  if (r < 1) throw std::invalid_argument("epsilon: r must be positive");
  return r <= 2 ? 1 : 2;
}

mpq_class generator_q_value(long long d) {
  if (!cd_nonempty(d))
    throw inadmissible_error("generator_q_value: C_d empty");
  if (d % 9 == 0)
    throw inadmissible_error("generator_q_value: group not cyclic (9 | d)");
  // The generator value realized on the complement actually constructed in
  // L0 (see the sign note in verify_kdperp_discriminant); isotropy of k*g is
  // unchanged under q -> -q, so the enumeration below is convention-proof.
  if (d % 6 == 2)
    return mod2(-mpq_class(static_cast<long>(2 * d - 1), static_cast<long>(3 * d)));
  return mod2(-mpq_class(static_cast<long>(2 * d - 9), static_cast<long>(3 * d)));
}

long long ma_bound_generic(long long d, long long kappa) {
  require_twisted_k3(d);
  long long c = twisted_decomposition(d, kappa);
  std::set<long long> iso = isotropic_elements(d, generator_q_value(d), kappa);
  long long orbits = isotropic_orbits_under_negation(iso, d);
  if (c == 2) {
    // <l> with l^2 = 2 lies in G1: O(d(<l>)) is trivial, tau = 1, no epsilon.
    return orbits;
  }
  // c > 2: <l> lies in G2. |O(d(<l>))| = 2^h; the images of O(<l>) = {+-id}
  // and of the Hodge isometries of the overlattice generate the order-two
  // subgroup <-1>, so the double-coset count is 2^(h-1).
  long long h = static_cast<long long>(factorize(c / 2).distinct_primes());
  long long tau = 1LL << (h - 1);
  return orbits * epsilon(kappa) * tau;
}

std::vector<long long> valid_kappas(long long d) {
  std::vector<long long> out;
  for (long long k = 2; k * k <= d; ++k)
    if (d % (k * k) == 0 && (d / (k * k)) % 2 == 0) out.push_back(k);
  return out;
}

}  // namespace cubicfm
