#include "cubicfm/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cubicfm {

mpq_class mod2(mpq_class x) {
  x.canonicalize();
  mpz_class fl;
  mpq_class half = x / 2;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  mpq_class r = x - 2 * mpq_class(fl);
  r.canonicalize();
  return r;
}

mpq_class mod1(mpq_class x) {
  x.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class r = x - mpq_class(fl);
  r.canonicalize();
  return r;
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric())
    throw std::invalid_argument("lattice: Gram matrix not symmetric");
  if (determinant(gram_) == 0)
    throw std::invalid_argument("lattice: degenerate Gram matrix");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_.at(i, i) % 2 != 0) return false;
  return true;
}

mpz_class Lattice::inner(const std::vector<mpz_class>& x,
                         const std::vector<mpz_class>& y) const {
  if (x.size() != rank() || y.size() != rank())
    throw std::invalid_argument("inner: wrong vector length");
  mpz_class s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_.at(i, j) * y[j];
  return s;
}

namespace {

IntMatrix u_gram() { return IntMatrix{{0, 1}, {1, 0}}; }

IntMatrix a2_gram() { return IntMatrix{{2, -1}, {-1, 2}}; }

// E8 Cartan matrix, Bourbaki node numbering (node 2 attached to node 4).
IntMatrix e8_gram() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    g.at(i, j) = -1;
    g.at(j, i) = -1;
  };
  link(0, 2);
  link(1, 3);
  link(2, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(6, 7);
  return g;
}

IntMatrix block_sum(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix g(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        g.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return g;
}

IntMatrix negate(IntMatrix m) { return -m; }

}  // namespace

Lattice standard(LatticeName name) {
  switch (name) {
    case LatticeName::U:
      return Lattice(u_gram());
    case LatticeName::E8minus:
      return Lattice(negate(e8_gram()));
    case LatticeName::A2:
      return Lattice(a2_gram());
    case LatticeName::A2minus:
      return Lattice(negate(a2_gram()));
    case LatticeName::L: {
      IntMatrix g(23, 23);
      g.at(0, 0) = 1;
      g.at(1, 1) = 1;
      for (std::size_t i = 2; i < 23; ++i) g.at(i, i) = -1;
      return Lattice(std::move(g));
    }
    case LatticeName::L0:
      return Lattice(block_sum({negate(a2_gram()), u_gram(), u_gram(),
                                negate(e8_gram()), negate(e8_gram())}));
    case LatticeName::LambdaK3:
      return Lattice(block_sum({negate(e8_gram()), negate(e8_gram()), u_gram(),
                                u_gram(), u_gram()}));
    case LatticeName::LambdaMukai:
      return Lattice(block_sum({negate(e8_gram()), negate(e8_gram()), u_gram(),
                                u_gram(), u_gram(), u_gram()}));
  }
  throw std::invalid_argument("standard: unknown lattice name");
}

Lattice standard(const std::string& name) {
  static const std::map<std::string, LatticeName> names = {
      {"U", LatticeName::U},
      {"E8minus", LatticeName::E8minus},
      {"A2", LatticeName::A2},
      {"A2minus", LatticeName::A2minus},
      {"L", LatticeName::L},
      {"L0", LatticeName::L0},
      {"LambdaK3", LatticeName::LambdaK3},
      {"LambdaMukai", LatticeName::LambdaMukai}};
  auto it = names.find(name);
  if (it == names.end())
    throw std::invalid_argument("standard: unknown lattice name '" + name + "'");
  return standard(it->second);
}

std::vector<std::string> standard_names() {
  return {"U", "E8minus", "A2", "A2minus", "L", "L0", "LambdaK3", "LambdaMukai"};
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  return Lattice(block_sum({a.gram(), b.gram()}));
}

Lattice rescale(const Lattice& l, const mpz_class& n) {
  if (n == 0) throw std::invalid_argument("rescale: n must be nonzero");
  IntMatrix g = l.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g.at(i, j) *= n;
  return Lattice(std::move(g));
}

std::pair<std::size_t, std::size_t> signature(const Lattice& l) {
  std::vector<mpz_class> c = characteristic_polynomial(l.gram());
  // Descartes' rule is exact for real-rooted polynomials.
  auto sign_changes = [](const std::vector<mpz_class>& p) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& coeff : p) {
      int s = sgn(coeff);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  std::size_t pos = sign_changes(c);
  std::vector<mpz_class> cneg = c;
  for (std::size_t k = 0; k < cneg.size(); ++k)
    if (k % 2 == 1) cneg[k] = -cneg[k];
  std::size_t neg = sign_changes(cneg);
  if (pos + neg != l.rank())
    throw std::logic_error("signature: degenerate Gram matrix");
  return {pos, neg};
}

bool Embedding::preserves_gram() const {
  return matrix.transpose() * target.gram() * matrix == source.gram();
}

std::vector<mpz_class> Embedding::apply(const std::vector<mpz_class>& x) const {
  if (x.size() != source.rank())
    throw std::invalid_argument("embedding: wrong vector length");
  std::vector<mpz_class> y(target.rank());
  for (std::size_t i = 0; i < target.rank(); ++i)
    for (std::size_t j = 0; j < source.rank(); ++j)
      y[i] += matrix.at(i, j) * x[j];
  return y;
}

std::pair<Lattice, Embedding> orthogonal_complement(
    const Lattice& amb, const std::vector<std::vector<mpz_class>>& vectors) {
  const std::size_t n = amb.rank(), k = vectors.size();
  IntMatrix vm(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    if (vectors[i].size() != n)
      throw std::invalid_argument("orthogonal_complement: wrong vector length");
    for (std::size_t j = 0; j < n; ++j) vm.at(i, j) = vectors[i][j];
  }
  if (rank(vm) != k)
    throw std::invalid_argument("orthogonal_complement: dependent vectors");
  // x is orthogonal to all v_i iff (V * G) x = 0; the kernel is saturated.
  IntMatrix basis = kernel_basis(vm * amb.gram());
  IntMatrix induced = basis * amb.gram() * basis.transpose();
  if (determinant(induced) == 0)
    throw std::invalid_argument("orthogonal_complement: degenerate complement");
  Lattice sub(induced);
  Embedding emb{sub, amb, basis.transpose(), true};
  return {std::move(sub), std::move(emb)};
}

DiscForm::DiscForm(std::vector<mpz_class> divisors,
                   std::vector<std::vector<mpq_class>> generators,
                   std::vector<std::vector<mpq_class>> gram_q, bool even)
    : divisors_(std::move(divisors)),
      generators_(std::move(generators)),
      gram_q_(std::move(gram_q)),
      even_(even) {}

DiscForm DiscForm::trivial() { return DiscForm({}, {}, {}, true); }

mpz_class DiscForm::order() const {
  mpz_class o = 1;
  for (const auto& d : divisors_) o *= d;
  return o;
}

mpq_class DiscForm::q(const std::vector<mpz_class>& x) const {
  if (!even_)
    throw std::domain_error("discriminant form: q undefined for odd lattice");
  if (x.size() != divisors_.size())
    throw std::invalid_argument("discriminant form: wrong tuple length");
  mpq_class v = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      v += mpq_class(x[i] * x[j]) * gram_q_[i][j];
  return mod2(v);
}

mpq_class DiscForm::b(const std::vector<mpz_class>& x,
                      const std::vector<mpz_class>& y) const {
  if (x.size() != divisors_.size() || y.size() != divisors_.size())
    throw std::invalid_argument("discriminant form: wrong tuple length");
  mpq_class v = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      v += mpq_class(x[i] * y[j]) * gram_q_[i][j];
  return mod1(v);
}

mpz_class DiscForm::element_order(const std::vector<mpz_class>& x) const {
  mpz_class ord = 1;
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    mpz_class xi = x[i] % divisors_[i];
    if (xi < 0) xi += divisors_[i];
    mpz_class g = gcd(xi, divisors_[i]);
    mpz_class o = divisors_[i] / g;
    ord = lcm(ord, o);
  }
  return ord;
}

std::vector<std::vector<mpz_class>> DiscForm::elements() const {
  std::vector<std::vector<mpz_class>> out;
  std::vector<mpz_class> cur(divisors_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size()) {
      cur[i] += 1;
      if (cur[i] < divisors_[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
  }
  if (divisors_.empty()) out = {{}};
  return out;
}

DiscForm discriminant_group(const Lattice& l) {
  SmithDecomposition d = smith_normal_form(l.gram());
  const std::size_t n = l.rank();
  // L^dual / L = Z^n / Gram Z^n; with U*Gram*V = S, the class of the standard
  // generator of Z/s_i pulls back to the rational vector V.col(i) / s_i.
  std::vector<mpz_class> divisors;
  std::vector<std::vector<mpq_class>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.s.at(i, i) <= 1) continue;
    divisors.push_back(d.s.at(i, i));
    std::vector<mpq_class> g(n);
    for (std::size_t j = 0; j < n; ++j) {
      g[j] = mpq_class(d.v.at(j, i), d.s.at(i, i));
      g[j].canonicalize();
    }
    gens.push_back(std::move(g));
  }
  std::vector<std::vector<mpq_class>> gram_q(
      gens.size(), std::vector<mpq_class>(gens.size()));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      mpq_class v = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          v += gens[a][i] * mpq_class(l.gram().at(i, j)) * gens[b][j];
      v.canonicalize();
      gram_q[a][b] = v;
    }
  return DiscForm(std::move(divisors), std::move(gens), std::move(gram_q),
                  l.is_even());
}

bool forms_agree(const DiscForm& a, const DiscForm& b) {
  if (a.order() > 10000 || b.order() > 10000)
    throw std::domain_error("forms_agree: order bound exceeded");
  if (a.elementary_divisors() != b.elementary_divisors()) return false;
  if (a.is_trivial()) return true;
  if (!a.even() || !b.even())
    throw std::domain_error("forms_agree: requires even lattices");

  const std::size_t k = a.elementary_divisors().size();
  std::vector<std::vector<mpz_class>> pool = b.elements();

  // unit generator tuples of a
  std::vector<std::vector<mpz_class>> eps(k, std::vector<mpz_class>(k, 0));
  for (std::size_t i = 0; i < k; ++i) eps[i][i] = 1;

  std::vector<std::vector<mpz_class>> images(k);
  // Candidate images for generator i: same order and same q value. Matching
  // q on generators plus b on pairs forces q to match everywhere.
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == k) {
      // bijectivity: images of all tuples must exhaust the group
      std::set<std::vector<mpz_class>> seen;
      for (const auto& x : a.elements()) {
        std::vector<mpz_class> y(k, 0);
        for (std::size_t t = 0; t < k; ++t)
          for (std::size_t j = 0; j < k; ++j) y[j] += x[t] * images[t][j];
        for (std::size_t j = 0; j < k; ++j) {
          y[j] %= b.elementary_divisors()[j];
          if (y[j] < 0) y[j] += b.elementary_divisors()[j];
        }
        seen.insert(y);
      }
      return mpz_class(seen.size()) == b.order();
    }
    for (const auto& y : pool) {
      if (b.element_order(y) != a.element_order(eps[i])) continue;
      if (b.q(y) != a.q(eps[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i; ++j)
        if (b.b(images[j], y) != a.b(eps[j], eps[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace cubicfm
