#include "camon/finite_field.hpp"

#include <sstream>

#include "camon/errors.hpp"

namespace camon {

namespace {

constexpr int kMaxFieldSize = 512;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// digit vector of code, length d, base p
std::vector<int> digits_of(int code, int p, int d) {
  std::vector<int> out(d);
  for (int i = 0; i < d; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

int code_of(const std::vector<int>& digits, int p) {
  int code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

// polynomial product of residues, reduced modulo the monic modulus
int residue_mul(const std::vector<int>& mod, int p, int d, int a, int b) {
  const std::vector<int> da = digits_of(a, p, d), db = digits_of(b, p, d);
  std::vector<int> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int k = 2 * d - 2; k >= d; --k) {
    const int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // x^k = -mod_low * x^(k-d) since the modulus is monic
    for (int i = 0; i < d; ++i)
      prod[k - d + i] = ((prod[k - d + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(d);
  return code_of(prod, p);
}

}  // namespace

FiniteField::FiniteField(int p) : FiniteField(p, {0, 1}) {}

FiniteField::FiniteField(int p, std::vector<int> modulus) {
  if (!is_prime(p)) throw ParseError("field characteristic must be prime");
  if (modulus.size() < 2) throw ParseError("modulus must have degree >= 1");
  p_ = p;
  d_ = static_cast<int>(modulus.size()) - 1;
  if (modulus[d_] != 1) throw ParseError("modulus must be monic");
  for (int c : modulus)
    if (c < 0 || c >= p) throw ParseError("modulus coefficient out of range");
  mod_ = std::move(modulus);

  long long q = 1;
  for (int i = 0; i < d_; ++i) {
    q *= p;
    if (q > kMaxFieldSize) throw BudgetError("field size above supported limit");
  }
  q_ = static_cast<int>(q);
  build_tables();

  if (d_ > 1) {
    // irreducibility: no zero divisors among nonzero residues
    for (int a = 1; a < q_; ++a)
      if (inv_[a] == 0) throw ParseError("modulus is not irreducible");
  }
}

void FiniteField::build_tables() {
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (int a = 0; a < q_; ++a)
    for (int b = a; b < q_; ++b) {
      const int m = d_ == 1 ? (a * b) % p_ : residue_mul(mod_, p_, d_, a, b);
      mul_[static_cast<std::size_t>(a) * q_ + b] = m;
      mul_[static_cast<std::size_t>(b) * q_ + a] = m;
    }
  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
}

int FiniteField::add(int a, int b) const {
  if (d_ == 1) return (a + b) % p_;
  int out = 0, w = 1;
  for (int i = 0; i < d_; ++i) {
    out += ((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return out;
}

int FiniteField::neg(int a) const {
  if (d_ == 1) return (p_ - a) % p_;
  int out = 0, w = 1;
  for (int i = 0; i < d_; ++i) {
    out += ((p_ - a % p_) % p_) * w;
    a /= p_;
    w *= p_;
  }
  return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::inv(int a) const {
  if (a == 0) throw ParseError("division by zero in finite field");
  return inv_[a];
}

int FiniteField::pow(int a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  int out = 1, base = a;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

int FiniteField::embed(long long n) const {
  return static_cast<int>(((n % p_) + p_) % p_);
}

int FiniteField::multiplicative_generator() const {
  for (int g = 1; g < q_; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == q_ - 1) return g;
  }
  throw ParseError("multiplicative group is not cyclic; bad modulus");
}

std::string FiniteField::spec_string() const {
  std::ostringstream out;
  out << p_ << '^' << d_ << ':';
  for (std::size_t i = 0; i < mod_.size(); ++i) {
    if (i) out << ',';
    out << mod_[i];
  }
  return out.str();
}

FiniteField FiniteField::of_order(int q) {
  int p = 0, d = 0;
  for (int cand = 2; cand <= q; ++cand) {
    if (!is_prime(cand) || q % cand != 0) continue;
    int v = q, e = 0;
    while (v % cand == 0) {
      v /= cand;
      ++e;
    }
    if (v == 1) {
      p = cand;
      d = e;
    }
    break;
  }
  if (p == 0) throw ParseError("field order must be a prime power");
  if (d == 1) return FiniteField(p);
  // lexicographically least monic irreducible of degree d: scan the lower
  // coefficients as a base-p counter
  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long low = 0; low < count; ++low) {
    std::vector<int> mod = digits_of(static_cast<int>(low), p, d);
    mod.push_back(1);
    try {
      return FiniteField(p, std::move(mod));
    } catch (const ParseError&) {
      continue;  // reducible candidate
    }
  }
  throw ParseError("no irreducible modulus found");  // unreachable
}

FiniteField FiniteField::parse_spec(std::string_view text) {
  std::string s(text);
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) s.erase(0, 1);
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const auto caret = s.find('^');
    int q = 0;
    if (caret == std::string::npos) {
      q = std::stoi(s);
    } else {
      const int p = std::stoi(s.substr(0, caret));
      const int d = std::stoi(s.substr(caret + 1));
      q = 1;
      for (int i = 0; i < d; ++i) q *= p;
    }
    return of_order(q);
  }
  const auto caret = s.find('^');
  if (caret == std::string::npos || caret > colon)
    throw ParseError("field spec must look like p^d:c0,c1,...,cd");
  const int p = std::stoi(s.substr(0, caret));
  const int d = std::stoi(s.substr(caret + 1, colon - caret - 1));
  std::vector<int> mod;
  std::istringstream coeffs(s.substr(colon + 1));
  std::string tok;
  while (std::getline(coeffs, tok, ',')) mod.push_back(std::stoi(tok));
  if (static_cast<int>(mod.size()) != d + 1)
    throw ParseError("modulus must have exactly d+1 coefficients");
  return FiniteField(p, std::move(mod));
}

}  // namespace camon
