#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctrz/polynomial.hpp"
#include "ctrz/rational.hpp"

namespace ctrz {

/// Q(ζ_e) presented as Q[x]/Φ_e(x) with power basis 1, ζ, ..., ζ^{φ(e)-1}.
/// Instances are shared and immutable; obtain them through get().
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(unsigned conductor,
                                                    unsigned cap = kDefaultConductorCap);

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const IntPoly& modulus() const { return modulus_; }

  /// Power-basis coordinates of ζ^m, for 0 <= m < conductor.
  const std::vector<BigInt>& power(unsigned m) const { return powers_[m]; }

  explicit CyclotomicField(unsigned conductor, unsigned cap);

 private:
  unsigned conductor_;
  IntPoly modulus_;
  std::vector<std::vector<BigInt>> powers_;
};

/// An exact element of a cyclotomic field. Arithmetic between different
/// conductors lifts both operands to the lcm.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q
  Cyclotomic(const BigRational& q);  // NOLINT: rationals convert implicitly
  Cyclotomic(long q) : Cyclotomic(BigRational(q)) {}  // NOLINT
  Cyclotomic(unsigned conductor, const BigRational& q);

  /// ζ_e^k for any integer k.
  static Cyclotomic zeta(unsigned conductor, long long exponent = 1);
  static Cyclotomic from_coeffs(unsigned conductor, std::vector<BigRational> coeffs);

  unsigned conductor() const { return field_->conductor(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws ValidationError if the value is not rational.
  BigRational rational() const;

  /// Same value in Q(ζ_e); `conductor` must be a multiple of the current one.
  Cyclotomic lift(unsigned conductor) const;
  /// Automorphism ζ ↦ ζ^k; k must be coprime to the conductor.
  Cyclotomic galois(long long k) const;
  /// Complex conjugation, ζ ↦ ζ^{-1}.
  Cyclotomic conj() const { return galois(-1); }
  /// Throws ValidationError on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(unsigned k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Power-basis sum, e.g. "1/2 + 3*z84^5".
  std::string to_string() const;

 private:
  Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<BigRational> coeffs);
  static Cyclotomic reduce(std::shared_ptr<const CyclotomicField> field,
                           std::vector<BigRational> by_exponent);
  void align_with(Cyclotomic& other);

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<BigRational> coeffs_;
};

/// Lexicographic order on power-basis coordinates (after lifting to a common
/// conductor). Arbitrary but total; used for deterministic sorting.
int compare_lex(const Cyclotomic& a, const Cyclotomic& b);

/// a + b·√D with D squarefree, D ∉ {0, 1}.
struct QuadraticView {
  long long D = 0;
  BigRational a;
  BigRational b;
  friend bool operator==(const QuadraticView&, const QuadraticView&) = default;
};

/// Image of √D in Q(ζ_e): the product of quadratic Gauss sums Σ (a/p) ζ_p^a over
/// the odd primes p | D, times ζ_4, ζ_8 + ζ_8^7 or ζ_8 + ζ_8^3 to fix the sign and
/// the 2-part. nullopt if Q(√D) is not a subfield of Q(ζ_e).
std::optional<Cyclotomic> sqrt_embedding(long long D, unsigned conductor);

/// Writes z as a + b·√D; nullopt if z ∉ Q(√D) or √D does not embed.
std::optional<QuadraticView> to_quadratic(const Cyclotomic& z, long long D);

/// Re-embeds a view into Q(ζ_e). Throws InputError if √D does not embed.
Cyclotomic from_quadratic(const QuadraticView& view, unsigned conductor);

/// Tries every quadratic subfield of Q(ζ_e); nullopt for rationals and for
/// values of degree > 2.
std::optional<QuadraticView> find_quadratic(const Cyclotomic& z);

/// "(-1+sqrt(-7))/2" style.
std::string to_string(const QuadraticView& view);

/// Rational, quadratic or power-basis display, whichever applies first.
std::string display(const Cyclotomic& z);

}  // namespace ctrz
