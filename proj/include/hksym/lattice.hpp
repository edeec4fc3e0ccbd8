#pragma once

#include "hksym/matrix.hpp"
#include "hksym/quadratic_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hksym {

/// Even, nondegenerate integral lattice given by its Gram matrix.
class Lattice {
 public:
  /// Throws InputError unless `gram` is square, symmetric, nondegenerate and even.
  explicit Lattice(IntMatrix gram, std::string name = {});

  /// The rank-zero lattice, the unit of direct_sum.
  static Lattice zero();

  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  std::size_t rank() const { return gram_.rows(); }
  const Integer& det() const { return det_; }
  /// |det gram|, the order of the discriminant group.
  Integer disc() const { return abs(det_); }
  bool is_unimodular() const { return disc() == 1; }

  Lattice renamed(std::string name) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string name_;
  Integer det_;
};

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Single named lattice: U, U(k), H5, E8, A<n>, each optionally scaled "(k)",
/// duals "A4*(-5)", and rank one lattices "<k>". Unicode minus and angle
/// brackets are accepted.
Lattice make_standard(const std::string& name);

/// Orthogonal sum of named lattices: "U+H5+A4(-1)^2+<-2>". Summands may carry a
/// multiplicity suffix "^k". "0" is the zero lattice.
Lattice lattice_from_expression(const std::string& expr);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Integer& k);
/// k * gram for a rational Gram matrix; throws InputError if the result is not even integral.
Lattice rescale_rational(const RatMatrix& gram, const Integer& k, std::string name = {});
/// Gram matrix of the dual lattice in the dual basis (the inverse Gram matrix).
RatMatrix dual_gram(const Lattice& l);

/// Inertia by congruence diagonalization over Q with 1x1 and 2x2 pivot blocks.
Signature signature(const RatMatrix& symmetric);
Signature signature(const Lattice& l);

struct DiscriminantGroup {
  /// Nontrivial invariant factors d_1 | d_2 | ...
  std::vector<Integer> orders;
  /// Column i is a dual vector of order orders[i] modulo L, in lattice coordinates.
  RatMatrix generators;
};

DiscriminantGroup discriminant_group(const Lattice& l);
FiniteQuadraticForm discriminant_form(const Lattice& l);

struct PElementary {
  bool flag = false;
  std::size_t a = 0;
};
PElementary is_p_elementary(const Lattice& l, unsigned long p);

/// Sublattice spanned by independent columns of `basis` (ambient coordinates).
class Sublattice {
 public:
  Sublattice(Lattice ambient, IntMatrix basis);

  const Lattice& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.cols(); }
  /// basis^T * G * basis.
  IntMatrix gram() const;
  /// Throws InputError if the induced form is degenerate.
  Lattice as_lattice() const;
  bool is_primitive() const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Lattice ambient_;
  IntMatrix basis_;
};

/// Saturated sublattice of all ambient vectors orthogonal to `m`.
Sublattice orthogonal_complement(const Sublattice& m);

}  // namespace hksym
