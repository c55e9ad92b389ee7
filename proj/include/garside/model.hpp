#pragma once

// Garside structures on Artin groups, described by their simple elements.
//
// A Model is the contract the generic machinery in core.hpp is written
// against: a finite set of atoms, the simple elements Div(Ω) of a base
// Garside element Ω, and the handful of operations on simples that greedy
// normal forms need. The working Garside element is Δ = Ω^e, where e is
// chosen so that Δ is central.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace garside {

/// Opaque encoding of a simple element; only meaningful together with the
/// Model that produced it.
struct Simple {
  std::uint64_t code = 0;

  friend constexpr bool operator==(Simple, Simple) = default;
  friend constexpr auto operator<=>(Simple, Simple) = default;
};

/// Bit i set means atom i belongs to the set.
using AtomMask = std::uint32_t;

constexpr AtomMask atom_bit(int i) { return AtomMask{1} << i; }

class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Model {
 public:
  explicit Model(std::string name) : name_(std::move(name)) {}
  virtual ~Model() = default;

  /// Short identifier, e.g. "A3" or "I2(5)". Two models with the same name
  /// describe the same structure.
  const std::string& name() const { return name_; }
  virtual int num_atoms() const = 0;
  /// Name used when printing words, e.g. "s2" or "t".
  virtual std::string atom_name(int atom) const = 0;
  /// Δ = Ω^e is the central Garside element used for Δ-forms.
  virtual int delta_exponent() const = 0;
  /// Order of the automorphism x ↦ ΩxΩ⁻¹ (1 when Ω is central).
  virtual int omega_conjugation_order() const { return 2; }
  /// Whether the atoms generate a standard parabolic submonoid.
  virtual bool is_parabolic_subset(AtomMask atoms) const = 0;

  virtual Simple identity() const = 0;
  virtual Simple omega() const = 0;
  virtual Simple atom(int i) const = 0;

  /// Number of atoms in any word for the simple.
  virtual int length(Simple x) const = 0;
  /// Atoms a with a ≤_R x.
  virtual AtomMask right_descents(Simple x) const = 0;
  /// Atoms a with a ≤_L x.
  virtual AtomMask left_descents(Simple x) const = 0;
  /// xy; precondition: the product is simple.
  virtual Simple product(Simple x, Simple y) const = 0;
  /// x y⁻¹; precondition: y ≤_R x.
  virtual Simple right_quotient(Simple x, Simple y) const = 0;
  /// y⁻¹ x; precondition: y ≤_L x.
  virtual Simple left_quotient(Simple x, Simple y) const = 0;
  /// Image under the word-reversing anti-automorphism.
  virtual Simple reverse(Simple x) const = 0;
  /// A word for x over atom indices, read left to right.
  virtual std::vector<int> word(Simple x) const = 0;

  // Derived lattice operations on simples. Models may override for speed.

  bool is_identity(Simple x) const { return x == identity(); }
  bool is_omega(Simple x) const { return x == omega(); }

  /// The simple y with y·x = Ω.
  Simple left_complement(Simple x) const { return right_quotient(omega(), x); }
  /// The simple y with x·y = Ω.
  Simple right_complement(Simple x) const { return left_quotient(omega(), x); }

  virtual Simple right_meet(Simple x, Simple y) const;
  virtual Simple left_meet(Simple x, Simple y) const;
  virtual Simple right_join(Simple x, Simple y) const;

  bool right_divides(Simple d, Simple x) const {
    return right_meet(d, x) == d;
  }

  /// Ω^k x Ω^{-k}.
  virtual Simple omega_conjugate(Simple x, int k) const;

  /// Atoms occurring in the words of x.
  AtomMask support(Simple x) const;

 private:
  std::string name_;
};

using ModelPtr = std::shared_ptr<const Model>;

inline bool same_model(const Model& a, const Model& b) {
  return &a == &b || a.name() == b.name();
}

}  // namespace garside

template <>
struct std::hash<garside::Simple> {
  std::size_t operator()(garside::Simple s) const noexcept {
    return std::hash<std::uint64_t>{}(s.code);
  }
};
