#pragma once

#include <optional>
#include <utility>

#include "cubicfm/intmat.hpp"

namespace cubicfm {

/// Canonical representative of x in Q/2Z, in [0, 2).
mpq_class mod2(mpq_class x);
/// Canonical representative of x in Q/Z, in [0, 1).
mpq_class mod1(mpq_class x);

/// Integral lattice given by a symmetric nondegenerate Gram matrix.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  mpz_class det() const { return determinant(gram_); }

  bool is_even() const;
  /// Inner product of two coordinate vectors.
  mpz_class inner(const std::vector<mpz_class>& x,
                  const std::vector<mpz_class>& y) const;

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  IntMatrix gram_;
};

enum class LatticeName { U, E8minus, A2, A2minus, L, L0, LambdaK3, LambdaMukai };

/// Named lattices, blocks in the conventional order:
///   L  = <1>^2 + <-1>^21
///   L0 = A2(-1) + U + U + E8(-1) + E8(-1)
///   LambdaK3 = E8(-1)^2 + U^3, LambdaMukai = E8(-1)^2 + U^4.
Lattice standard(LatticeName name);
Lattice standard(const std::string& name);  // throws on unknown name
std::vector<std::string> standard_names();

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const mpz_class& n);

/// (positive, negative) inertia, exact: Descartes sign-change count on the
/// characteristic polynomial (all roots real for a symmetric matrix).
std::pair<std::size_t, std::size_t> signature(const Lattice& l);

/// Isometric embedding of one lattice into another, source basis written in
/// target coordinates as the columns of `matrix`.
struct Embedding {
  Lattice source;
  Lattice target;
  IntMatrix matrix;  // target.rank() x source.rank()
  bool primitive;

  /// M^T * gram_target * M == gram_source.
  bool preserves_gram() const;
  std::vector<mpz_class> apply(const std::vector<mpz_class>& x) const;
};

/// Saturated sublattice {x : (x, v_i) = 0 for all i} with its induced Gram
/// and primitive embedding. Throws if the spanning vectors are dependent or
/// the induced form is degenerate.
std::pair<Lattice, Embedding> orthogonal_complement(
    const Lattice& amb, const std::vector<std::vector<mpz_class>>& vectors);

/// The discriminant group L^dual / L in elementary-divisor form, with the
/// induced Q/Z bilinear form and, for even L, the Q/2Z quadratic form.
class DiscForm {
 public:
  DiscForm(std::vector<mpz_class> divisors,
           std::vector<std::vector<mpq_class>> generators,
           std::vector<std::vector<mpq_class>> gram_q, bool even);

  static DiscForm trivial();

  const std::vector<mpz_class>& elementary_divisors() const { return divisors_; }
  const std::vector<std::vector<mpq_class>>& generators() const {
    return generators_;
  }
  bool even() const { return even_; }
  mpz_class order() const;
  bool is_trivial() const { return divisors_.empty(); }
  bool is_cyclic() const { return divisors_.size() <= 1; }

  /// Quadratic form value of sum_i x[i]*g_i, in [0, 2). Requires an even
  /// source lattice.
  mpq_class q(const std::vector<mpz_class>& x) const;
  /// Bilinear form value, in [0, 1).
  mpq_class b(const std::vector<mpz_class>& x,
              const std::vector<mpz_class>& y) const;

  mpz_class element_order(const std::vector<mpz_class>& x) const;
  /// All elements as coefficient tuples (0 <= x[i] < divisors_[i]).
  std::vector<std::vector<mpz_class>> elements() const;

 private:
  std::vector<mpz_class> divisors_;                  // d1 | d2 | ..., all > 1
  std::vector<std::vector<mpq_class>> generators_;   // dual representatives
  std::vector<std::vector<mpq_class>> gram_q_;       // g_i^T Gram g_j
  bool even_;
};

DiscForm discriminant_group(const Lattice& l);

/// True iff there is a group isomorphism matching q pointwise, found by
/// brute-force search over generator images. Both groups must be even and of
/// order <= 10^4.
bool forms_agree(const DiscForm& a, const DiscForm& b);

}  // namespace cubicfm
