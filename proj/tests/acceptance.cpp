// Acceptance gate: eleven criteria, one pass/fail line each, exit 0 iff all
// pass. Every comparison is exact.
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cubicfm/oracle.hpp"

using namespace cubicfm;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& note = "") {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++failures;
}

bool all_passed(const std::vector<VerificationResult>& rs, std::string& note) {
  for (const auto& r : rs)
    if (!r.passed) {
      note = r.check_name + ": expected " + r.expected + ", got " + r.actual;
      return false;
    }
  note = std::to_string(rs.size()) + " checks";
  return true;
}

bool counts_match(long long d, long long m, long long p, std::string& note) {
  CountReport r = cubic_fm_count(d);
  note = "m=" + std::to_string(*r.m) + " p_cubic=" + std::to_string(*r.p_cubic);
  return *r.m == m && *r.p_cubic == p;
}

bool twisted_match(long long d, long long kappa, long long mp,
                   std::optional<long long> lb, std::string& note) {
  CountReport r = twisted_fm_count(d, kappa);
  note = "m'=" + std::to_string(*r.m_prime) +
         " lower_bound=" + std::to_string(*r.lower_bound_cubic);
  if (*r.m_prime != mp) return false;
  return !lb || *r.lower_bound_cubic == *lb;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entry(rng);
  return m;
}

bool snf_contract(const IntMatrix& a, std::string& note) {
  SmithDecomposition snf = smith_normal_form(a);
  if (abs(determinant(snf.u)) != 1 || abs(determinant(snf.v)) != 1) {
    note = "non-unimodular transform";
    return false;
  }
  if (snf.u * a * snf.v != snf.s) {
    note = "U*A*V != S";
    return false;
  }
  mpz_class prev = 0;
  bool seen_zero = false;
  for (std::size_t i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i) {
    const mpz_class& si = snf.s.at(i, i);
    if (si < 0 || (seen_zero && si != 0)) {
      note = "diagonal not canonical";
      return false;
    }
    if (si == 0) seen_zero = true;
    if (prev != 0 && si != 0 && si % prev != 0) {
      note = "divisor chain broken";
      return false;
    }
    prev = si;
  }
  for (std::size_t i = 0; i < snf.s.rows(); ++i)
    for (std::size_t j = 0; j < snf.s.cols(); ++j)
      if (i != j && snf.s.at(i, j) != 0) {
        note = "S not diagonal";
        return false;
      }
  return true;
}

bool disc_form_properties(const Lattice& l, std::string& note) {
  DiscForm df = discriminant_group(l);
  auto gens = df.elementary_divisors();
  std::vector<std::vector<mpz_class>> elems = df.elements();
  // q(nx) = n^2 q(x) and well-definedness: shifting a coordinate by its
  // divisor must not change q or b.
  for (const auto& x : elems) {
    mpq_class qx = df.q(x);
    for (long n = 0; n <= 3; ++n) {
      std::vector<mpz_class> nx(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) nx[i] = n * x[i];
      if (df.q(nx) != mod2(mpq_class(n * n) * qx)) {
        note = "q(nx) != n^2 q(x)";
        return false;
      }
    }
    if (!x.empty()) {
      std::vector<mpz_class> shifted = x;
      shifted[0] += gens[0];
      if (df.q(shifted) != qx) {
        note = "q not well-defined mod divisors";
        return false;
      }
    }
    // polarization identity: q(x+y) - q(x) - q(y) = 2 b(x,y) in Q/2Z
    for (const auto& y : elems) {
      std::vector<mpz_class> xy(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) xy[i] = x[i] + y[i];
      mpq_class lhs = mod2(df.q(xy) - qx - df.q(y));
      mpq_class rhs = mod2(2 * df.b(x, y));
      if (lhs != rhs) {
        note = "polarization identity fails";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  std::string note;

  report(1, "d=42: has_k3, m=2, p_cubic=1",
         has_associated_k3(42) && counts_match(42, 2, 1, note), note);
  report(2, "d=182: m=2, p_cubic=2", counts_match(182, 2, 2, note), note);
  report(3, "d=546: m=4, p_cubic=2", counts_match(546, 4, 2, note), note);
  report(4, "(d,kappa)=(50,5): m'=2, lower_bound=2",
         twisted_match(50, 5, 2, 2, note), note);
  report(5, "(d,kappa)=(338,13): m'=6", twisted_match(338, 13, 6, {}, note),
         note);

  {
    bool ok = all_passed(verify_prop_kdperp_range(1000), note);
    report(6, "discriminant group of K_d-perp, admissible d <= 1000", ok, note);
  }

  {
    bool ok = true;
    long long checks = 0;
    for (auto [d, k] : twisted_range(2000, 13)) {
      VerificationResult r = verify_isotropic_lemma(d, k);
      ++checks;
      if (!r.passed) {
        ok = false;
        note = r.check_name + ": expected " + r.expected + ", got " + r.actual;
        break;
      }
    }
    if (ok) note = std::to_string(checks) + " (d,kappa) pairs";
    report(7, "isotropic sets vs closed form, d <= 2000, kappa <= 13", ok,
           note);
  }

  {
    bool ok = all_passed(verify_ma_consistency(2000, 13), note);
    report(8, "counting formula vs twisted count, same sweep", ok, note);
  }

  {
    VerificationResult r = verify_a2_complement();
    report(9, "A2 complement in the Mukai lattice", r.passed,
           r.passed ? r.actual : "expected " + r.expected + ", got " + r.actual);
  }

  {
    bool ok = all_passed(verify_gamma_double_cover(1000), note);
    report(10, "gamma stabilizes the labelling line iff d = 0 (mod 6)", ok,
           note);
  }

  {
    bool ok = true;
    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int t = 0; t < 500 && ok; ++t)
      ok = snf_contract(random_matrix(rng, dim(rng), dim(rng)), note);
    if (ok) {
      std::vector<Lattice> samples = {
          standard(LatticeName::U),          standard(LatticeName::A2),
          standard(LatticeName::A2minus),    standard(LatticeName::E8minus),
          rescale(standard(LatticeName::A2), 3),
          Lattice(IntMatrix{{2, 1}, {1, 4}}),
          Lattice(IntMatrix{{4, 2}, {2, 6}}),
          kd_perp(42),                       kd_perp(54),
          kd_perp(182),                      kd_perp(500)};
      for (const auto& l : samples) {
        if (abs(l.det()) > 1000 || !l.is_even()) continue;
        if (!disc_form_properties(l, note)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) note = "500 random SNF checks + discriminant form properties";
    report(11, "property suite: SNF contract and discriminant forms", ok,
           note);
  }

  std::printf("%s: %d of 11 criteria passed\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              11 - failures);
  return failures == 0 ? 0 : 1;
}
