#pragma once

#include "cubicfm/fmcount.hpp"

namespace cubicfm {

/// Brute-force verifiers. Each check computes its expected value by a route
/// disjoint from the formula under test (enumeration against closed form,
/// SNF of an actual complement against a stated group structure).
struct VerificationResult {
  std::string check_name;
  std::optional<long long> d;
  std::optional<long long> kappa;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// The fixed A2 inside the Mukai lattice (lambda1 = e2+f2,
/// lambda2 = e1+f1-e2): spans Gram [[2,-1],[-1,2]]; its complement has rank
/// 22, signature (2,20), is even, |det| 3, and carries the discriminant form
/// of A2(-1).
VerificationResult verify_a2_complement();

/// verify_kdperp_discriminant over every admissible d <= d_max.
std::vector<VerificationResult> verify_prop_kdperp_range(long long d_max);

/// Enumerated isotropic set of order kappa against the closed form
/// {a*kappa*c mod d : gcd(a, kappa) = 1}, which must have phi(kappa) elements.
VerificationResult verify_isotropic_lemma(long long d, long long kappa);

/// The headline counts: d=42, 182, 546 (untwisted) and (50,5), (338,13)
/// (twisted).
std::vector<VerificationResult> verify_thm_examples();

/// gamma preserves Gram(L0) and stabilizes the line Z*v_d iff d = 0 (mod 6),
/// for every admissible d <= d_max.
std::vector<VerificationResult> verify_gamma_double_cover(long long d_max);

/// ma_bound_generic == twisted_fm_count over all valid (d <= d_max,
/// kappa <= kappa_max).
std::vector<VerificationResult> verify_ma_consistency(long long d_max,
                                                      long long kappa_max);

/// Full suite, results sorted by (check_name, d).
std::vector<VerificationResult> run_all(long long d_max = 1000,
                                        long long kappa_max = 13);

/// All admissible d in [8, d_max].
std::vector<long long> admissible_range(long long d_max);

/// (d, kappa) pairs in the twisted regime: admissible with twisted K3,
/// 9 does not divide d, kappa^2 | d, d/kappa^2 even.
std::vector<std::pair<long long, long long>> twisted_range(long long d_max,
                                                           long long kappa_max);

}  // namespace cubicfm
