#ifndef CAMON_FINITE_FIELD_HPP_
#define CAMON_FINITE_FIELD_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace camon {

/// The field F_q, q = p^d, with elements represented as residues modulo a
/// monic irreducible polynomial over F_p.  An element is coded as an integer
/// in [0, q) whose base-p digits are the polynomial coefficients, so 0 and 1
/// code the additive and multiplicative identities.
class FiniteField {
 public:
  explicit FiniteField(int p);                       // prime field
  FiniteField(int p, std::vector<int> modulus);      // explicit modulus
  static FiniteField of_order(int q);                // lex-least modulus

  int characteristic() const { return p_; }
  int degree() const { return d_; }
  int size() const { return q_; }
  const std::vector<int>& modulus() const { return mod_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int embed(long long n) const;  // n mod p as a constant

  /// A generator of the cyclic group F_q^*; throws if none exists (which
  /// would mean the modulus was not irreducible).
  int multiplicative_generator() const;

  /// "p^d:c0,c1,...,cd" with modulus coefficients low to high.
  std::string spec_string() const;
  /// Accepts the spec_string() format and the shorthands "F<q>" / "<q>".
  static FiniteField parse_spec(std::string_view text);

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && mod_ == other.mod_;
  }

 private:
  void build_tables();
  int p_ = 2, d_ = 1, q_ = 2;
  std::vector<int> mod_;           // monic, length d+1, coefficients in [0,p)
  std::vector<int> mul_;           // q x q
  std::vector<int> inv_;           // q
};

}  // namespace camon

#endif  // CAMON_FINITE_FIELD_HPP_
