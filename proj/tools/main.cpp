// Command line front end: admissibility checks, partner counts, range tables,
// lattice summaries, and the self-verification suite.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "cubicfm/oracle.hpp"

using namespace cubicfm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitInadmissible = 3;
constexpr int kExitBadKappa = 4;

std::string rat(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();  // "a/b" reduced, or "a" when integral
}

std::string yesno(bool b) { return b ? "true" : "false"; }

// One table row: a d-level record, optionally specialized to one kappa.
struct Record {
  long long d;
  AdmissibilityReport adm;
  std::optional<CountReport> count;    // untwisted, when has_k3
  std::optional<CountReport> twisted;  // when kappa set
};

json to_json(const Record& r) {
  json j;
  j["d"] = r.d;
  j["d_mod_6"] = r.adm.d_mod_6;
  j["cd_nonempty"] = r.adm.cd_nonempty;
  j["has_k3"] = r.adm.has_k3;
  j["has_twisted_k3"] = r.adm.has_twisted_k3;
  j["m"] = r.count ? json(*r.count->m) : json(nullptr);
  j["p_cubic"] = r.count ? json(*r.count->p_cubic) : json(nullptr);
  j["kappa"] = r.twisted ? json(*r.twisted->kappa) : json(nullptr);
  j["c"] = r.twisted ? json(*r.twisted->c) : json(nullptr);
  j["m_prime"] = r.twisted ? json(*r.twisted->m_prime) : json(nullptr);
  j["lower_bound_cubic"] =
      r.twisted ? json(*r.twisted->lower_bound_cubic) : json(nullptr);
  j["branch"] = r.twisted ? r.twisted->branch
                          : (r.count ? r.count->branch : std::string());
  return j;
}

std::string csv_field(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      return quoted;
    }
    return s;
  }
  return v.dump();
}

const char* kCsvHeader =
    "d,d_mod_6,cd_nonempty,has_k3,has_twisted_k3,m,p_cubic,kappa,c,m_prime,"
    "lower_bound_cubic,branch";

void print_csv_row(const json& j) {
  static const char* keys[] = {"d",       "d_mod_6", "cd_nonempty",
                               "has_k3",  "has_twisted_k3",
                               "m",       "p_cubic", "kappa",
                               "c",       "m_prime", "lower_bound_cubic",
                               "branch"};
  bool first = true;
  for (const char* k : keys) {
    if (!first) std::cout << ',';
    first = false;
    std::cout << csv_field(j.at(k));
  }
  std::cout << '\n';
}

std::vector<Record> records_for(long long d) {
  Record base;
  base.d = d;
  base.adm = admissibility(d);
  if (base.adm.has_k3) base.count = cubic_fm_count(d);
  std::vector<Record> out;
  std::vector<long long> kappas;
  if (base.adm.has_twisted_k3 && d % 9 != 0) kappas = valid_kappas(d);
  if (kappas.empty()) {
    out.push_back(base);
  } else {
    for (long long k : kappas) {
      Record r = base;
      r.twisted = twisted_fm_count(d, k);
      out.push_back(r);
    }
  }
  return out;
}

int cmd_check(long long d) {
  AdmissibilityReport r = admissibility(d);
  std::cout << "d = " << d << " (d mod 6 = " << r.d_mod_6 << ")\n"
            << "cd_nonempty    = " << yesno(r.cd_nonempty) << '\n'
            << "has_k3         = " << yesno(r.has_k3) << '\n'
            << "has_twisted_k3 = " << yesno(r.has_twisted_k3) << '\n';
  for (const auto& reason : r.reasons) std::cout << "reason: " << reason << '\n';
  return kExitOk;
}

int cmd_count(long long d) {
  CountReport r = cubic_fm_count(d);
  std::cout << "d = " << d << '\n'
            << "m (K3 partners)        = " << *r.m << '\n'
            << "p_cubic (FM partners)  = " << *r.p_cubic << '\n'
            << "branch: " << r.branch << '\n';
  if (r.closed_form_applies)
    std::cout << "closed form applies: p = " << *r.closed_form << '\n';
  return kExitOk;
}

void print_twisted(const CountReport& r) {
  std::cout << "d = " << r.d << ", kappa = " << *r.kappa << ", c = " << *r.c
            << '\n'
            << "m_prime (twisted partners) = " << *r.m_prime << '\n'
            << "lower_bound_cubic          = " << *r.lower_bound_cubic << '\n'
            << "branch: " << r.branch << '\n';
}

int cmd_count_twisted(long long d, std::optional<long long> kappa) {
  if (kappa) {
    print_twisted(twisted_fm_count(d, *kappa));
    return kExitOk;
  }
  auto kappas = valid_kappas(d);
  if (kappas.empty()) {
    if (!has_associated_twisted_k3(d) || d % 9 == 0)
      twisted_fm_count(d, 2);  // throws inadmissible_error naming the reason
    throw invalid_kappa_error(
        "d = " + std::to_string(d) +
        ": no kappa >= 2 with kappa^2 | d and d/kappa^2 even");
  }
  bool first = true;
  for (long long k : kappas) {
    if (!first) std::cout << '\n';
    first = false;
    print_twisted(twisted_fm_count(d, k));
  }
  return kExitOk;
}

int cmd_table(long long dmin, long long dmax, const std::string& format) {
  if (dmin < 1 || dmax < dmin || dmax > 1000000) {
    std::cerr << "table: need 1 <= dmin <= dmax <= 10^6\n";
    return kExitParse;
  }
  std::vector<json> rows;
  for (long long d = dmin; d <= dmax; ++d) {
    if (!cd_nonempty(d)) continue;
    for (const Record& r : records_for(d)) rows.push_back(to_json(r));
  }
  if (format == "csv") {
    std::cout << kCsvHeader << '\n';
    for (const json& j : rows) print_csv_row(j);
  } else {
    json arr = json::array();
    for (json& j : rows) arr.push_back(std::move(j));
    std::cout << arr.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_lattice_info(const std::string& name) {
  Lattice l = standard(name);
  auto [pos, neg] = signature(l);
  std::cout << "lattice " << name << '\n'
            << "rank      = " << l.rank() << '\n'
            << "signature = (" << pos << "," << neg << ")\n"
            << "parity    = " << (l.is_even() ? "even" : "odd") << '\n'
            << "det       = " << l.det().get_str() << '\n';
  DiscForm df = discriminant_group(l);
  std::cout << "discriminant group = ";
  if (df.is_trivial()) {
    std::cout << "trivial\n";
  } else {
    bool first = true;
    for (const auto& n : df.elementary_divisors()) {
      if (!first) std::cout << " + ";
      first = false;
      std::cout << "Z/" << n.get_str();
    }
    std::cout << '\n';
  }
  if (l.is_even() && abs(l.det()) <= 10000) {
    for (std::size_t i = 0; i < df.elementary_divisors().size(); ++i) {
      std::vector<mpz_class> x(df.elementary_divisors().size(), 0);
      x[i] = 1;
      std::cout << "q(g" << i + 1 << ") = " << rat(df.q(x)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(long long dmax, long long kappamax) {
  auto results = run_all(dmax, kappamax);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name;
    if (r.d) std::cout << " d=" << *r.d;
    if (r.kappa) std::cout << " kappa=" << *r.kappa;
    if (!r.passed)
      std::cout << " expected=" << r.expected << " actual=" << r.actual;
    std::cout << '\n';
    if (r.passed) ++passed;
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice arithmetic for special cubic fourfolds: "
               "associated (twisted) K3 surfaces and Fourier-Mukai partner "
               "counts"};
  app.require_subcommand(1);

  long long d = 0;
  std::optional<long long> kappa;
  long long dmin = 0, dmax_tbl = 0;
  std::string format = "csv";
  std::string name;
  long long vmax = 1000, kmax = 13;

  auto* check = app.add_subcommand("check", "Admissibility flags for d");
  check->add_option("d", d, "discriminant")->required();

  auto* count = app.add_subcommand("count", "Fourier-Mukai partner count");
  count->add_option("d", d, "discriminant")->required();

  auto* ct = app.add_subcommand("count-twisted", "Twisted partner counts");
  ct->add_option("d", d, "discriminant")->required();
  long long kappa_raw = -1;
  ct->add_option("kappa", kappa_raw, "Brauer class order");

  auto* table = app.add_subcommand("table", "Sweep a range of discriminants");
  table->add_option("dmin", dmin, "lower end")->required();
  table->add_option("dmax", dmax_tbl, "upper end")->required();
  table->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* info = app.add_subcommand("lattice-info", "Named lattice summary");
  info->add_option("name", name, "lattice name")->required();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--dmax", vmax, "discriminant sweep bound");
  verify->add_option("--kappamax", kmax, "Brauer order sweep bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (kappa_raw >= 0) kappa = kappa_raw;

  try {
    if (check->parsed()) return cmd_check(d);
    if (count->parsed()) return cmd_count(d);
    if (ct->parsed()) return cmd_count_twisted(d, kappa);
    if (table->parsed()) return cmd_table(dmin, dmax_tbl, format);
    if (info->parsed()) return cmd_lattice_info(name);
    if (verify->parsed()) return cmd_verify(vmax, kmax);
  } catch (const invalid_kappa_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadKappa;
  } catch (const inadmissible_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInadmissible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitParse;
}
