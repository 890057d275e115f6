#include <doctest.h>

#include "cubicfm/oracle.hpp"

using namespace cubicfm;

TEST_CASE("A2 complement in the Mukai lattice") {
  VerificationResult r = verify_a2_complement();
  CHECK(r.passed);
}

TEST_CASE("kd_perp discriminant across a range") {
  for (const auto& r : verify_prop_kdperp_range(200)) CHECK(r.passed);
}

TEST_CASE("isotropic lemma against the closed form") {
  CHECK(verify_isotropic_lemma(50, 5).passed);
  CHECK(verify_isotropic_lemma(338, 13).passed);
  CHECK(verify_isotropic_lemma(8, 2).passed);
  CHECK(verify_isotropic_lemma(200, 2).passed);
  CHECK(verify_isotropic_lemma(200, 5).passed);
}

TEST_CASE("headline example counts") {
  for (const auto& r : verify_thm_examples()) {
    INFO(r.check_name, " d=", r.d ? *r.d : -1, " expected=", r.expected,
         " actual=", r.actual);
    CHECK(r.passed);
  }
}

TEST_CASE("gamma double cover criterion") {
  for (const auto& r : verify_gamma_double_cover(300)) CHECK(r.passed);
}

TEST_CASE("counting formula consistency") {
  for (const auto& r : verify_ma_consistency(600, 13)) CHECK(r.passed);
}

TEST_CASE("admissible and twisted ranges") {
  std::vector<long long> adm = admissible_range(50);
  CHECK(adm == std::vector<long long>{8, 12, 14, 18, 20, 24, 26, 30, 32, 36, 38,
                                      42, 44, 48, 50});
  auto tw = twisted_range(60, 13);
  // d = 8 (kappa 2) and d = 50 (kappa 5) are the only entries <= 60 besides
  // d = 32 (kappa 2: c = 8, and kappa 4: c = 2)
  bool has_8_2 = false, has_50_5 = false, has_32_4 = false;
  for (auto [d, k] : tw) {
    has_8_2 |= (d == 8 && k == 2);
    has_50_5 |= (d == 50 && k == 5);
    has_32_4 |= (d == 32 && k == 4);
  }
  CHECK(has_8_2);
  CHECK(has_50_5);
  CHECK(has_32_4);
  for (auto [d, k] : tw) {
    CHECK(has_associated_twisted_k3(d));
    CHECK(d % 9 != 0);
    CHECK(d % (k * k) == 0);
    CHECK((d / (k * k)) % 2 == 0);
  }
}

TEST_CASE("full suite is green and sorted") {
  auto all = run_all(300, 7);
  CHECK(!all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) {
    auto key = [](const VerificationResult& r) {
      return std::make_pair(r.check_name, r.d.value_or(-1));
    };
    CHECK(key(all[i - 1]) <= key(all[i]));
  }
  for (const auto& r : all) {
    INFO(r.check_name, " expected=", r.expected, " actual=", r.actual);
    CHECK(r.passed);
  }
}
