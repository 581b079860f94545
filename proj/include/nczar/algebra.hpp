#pragma once

#include <map>
#include <string>
#include <vector>

#include "nczar/scalar.hpp"

namespace nczar {

/// The four operator algebras.
///   AffineEps:   X, Y, Z, F, G, E           (no adjoint for X)
///   AffineSharp: adds the unbounded W, making the *-structure total
///   TorusBase:   X^{+-1}, Y, F, G, E        (no adjoint for X)
///   TorusExt:    X^{+-1}, W^{+-1}, F, G, E  (Y = W^N; *-structure total)
enum class AlgebraKind { AffineEps, AffineSharp, TorusBase, TorusExt };

enum class Gen { X, Xinv, W, Winv, Y, Yinv, Z, Zinv, F, Finv, G, Ginv, E, Einv };

using Word = std::vector<Gen>;

Flavor flavor_of(AlgebraKind kind);
bool gen_valid(AlgebraKind kind, Gen gen);
std::string gen_name(Gen gen);

/// Normal-form exponent vector X^x W^w Y^y Z^z F^f G^g E^e.
/// Invariants by kind: affine keeps x, w >= 0 and y, z, e in [0, N);
/// the torus algebras keep x in Z, w in [0, N^2) (ext), y in [0, N)
/// (base), e in [0, N); f, g range over Z everywhere.
struct Monomial {
  long long x = 0;
  long long w = 0;
  long long y = 0;
  long long z = 0;
  long long f = 0;
  long long g = 0;
  long long e = 0;

  auto operator<=>(const Monomial&) const = default;
  bool is_unit() const {
    return x == 0 && w == 0 && y == 0 && z == 0 && f == 0 && g == 0 && e == 0;
  }
};

/// Element of the algebra in normal form: a finite sum of ordered
/// monomials with exact Scalar coefficients.  All arithmetic keeps the
/// normal form, rewriting with the two-term relation rules when a
/// generator is appended on the right.
class OpElement {
 public:
  OpElement() : kind_(AlgebraKind::AffineEps), N_(1) {}
  OpElement(AlgebraKind kind, int N) : kind_(kind), N_(N) {}

  static OpElement zero(AlgebraKind kind, int N);
  static OpElement one(AlgebraKind kind, int N);
  static OpElement scalar_element(AlgebraKind kind, int N, const Scalar& s);
  static OpElement generator(AlgebraKind kind, int N, Gen gen);
  static OpElement from_word(AlgebraKind kind, int N, const Word& word);

  AlgebraKind kind() const { return kind_; }
  int N() const { return N_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  OpElement operator+(const OpElement& o) const;
  OpElement operator-(const OpElement& o) const;
  OpElement operator-() const;
  OpElement operator*(const OpElement& o) const;
  OpElement& operator+=(const OpElement& o);
  OpElement& operator*=(const OpElement& o);
  OpElement scaled(const Scalar& s) const;

  bool operator==(const OpElement& o) const;

  /// Right-multiplication by a single generator (the rewriting step).
  OpElement append(Gen gen) const;

  /// The C*-involution.  Throws for X in the kinds where X has no
  /// adjoint (AffineEps, TorusBase).
  OpElement adjoint() const;

  /// Canonical text form; round-trips through parse_element.
  std::string to_string() const;

 private:
  void insert_term(const Monomial& m, const Scalar& s);

  AlgebraKind kind_;
  int N_;
  std::map<Monomial, Scalar> terms_;
};

/// One defining relation, stored as two words whose normal forms must
/// agree (possibly with a scalar twist folded into `lhs_scale`).
struct RelationCheck {
  std::string name;
  bool passed = false;
};

/// Verifies the full defining relation list of the given algebra by
/// normalizing both sides of every relation.
std::vector<RelationCheck> check_relations(AlgebraKind kind, int N);

}  // namespace nczar
