#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gls {

// Element a+bi of Z[i]. Every arithmetic operator is overflow-checked and
// throws std::overflow_error instead of wrapping.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussianInt() = default;
  constexpr GaussianInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

GaussianInt operator+(GaussianInt a, GaussianInt b);
GaussianInt operator-(GaussianInt a, GaussianInt b);
GaussianInt operator-(GaussianInt a);
GaussianInt operator*(GaussianInt a, GaussianInt b);

std::int64_t norm(GaussianInt z);
GaussianInt conj(GaussianInt z);
double modulus(GaussianInt z);
std::complex<double> to_complex(GaussianInt z);

inline constexpr GaussianInt kUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

bool is_unit(GaussianInt z);

// Rounded division: quotient is the componentwise nearest integer of a/c,
// ties broken toward -infinity. The remainder lies in c * (-1/2, 1/2]^2.
std::pair<GaussianInt, GaussianInt> divmod(GaussianInt a, GaussianInt c);
GaussianInt reduce(GaussianInt a, GaussianInt c);
bool divides(GaussianInt d, GaussianInt n);
// n / d, throws std::domain_error unless d divides n.
GaussianInt exact_div(GaussianInt n, GaussianInt d);
bool congruent(GaussianInt a, GaussianInt b, GaussianInt c);

// Canonical generator of a nonzero principal ideal: arg in [0, pi/2).
class IdealRep {
 public:
  static IdealRep of(GaussianInt z);
  GaussianInt gen() const { return gen_; }
  std::int64_t norm() const { return gls::norm(gen_); }

  friend bool operator==(const IdealRep&, const IdealRep&) = default;
  // Order by (norm, re).
  friend std::strong_ordering operator<=>(const IdealRep& a, const IdealRep& b);

 private:
  explicit IdealRep(GaussianInt g) : gen_(g) {}
  GaussianInt gen_;
};

IdealRep canonical(GaussianInt z);
IdealRep gcd(GaussianInt a, GaussianInt b);
IdealRep gcd(GaussianInt a, GaussianInt b, GaussianInt c);

// x with a*x = 1 mod c, reduced. Throws std::domain_error if gcd(a,c) != 1.
GaussianInt inverse(GaussianInt a, GaussianInt c);

inline constexpr std::int64_t kDefaultResidueCap = 1'000'000;

// Complete residue system mod c. Classes are laid out by Smith normal form
// coordinates (i, j) in Z/d1 x Z/d2, index = i*d2 + j, so addition and
// subtraction of classes can be done on indices.
class ResidueSystem {
 public:
  explicit ResidueSystem(GaussianInt c, std::int64_t cap = kDefaultResidueCap);

  GaussianInt modulus() const { return c_; }
  std::size_t size() const { return elems_.size(); }
  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }
  const std::vector<GaussianInt>& elements() const { return elems_; }
  const GaussianInt& operator[](std::size_t i) const { return elems_[i]; }

  std::size_t index_of(GaussianInt z) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t sub(std::size_t a, std::size_t b) const;

 private:
  GaussianInt c_;
  std::int64_t d1_ = 1, d2_ = 1;
  std::int64_t u_[2][2] = {{1, 0}, {0, 1}};  // row transform to SNF coordinates
  std::vector<GaussianInt> elems_;
};

std::vector<GaussianInt> residues(GaussianInt c, std::int64_t cap = kDefaultResidueCap);

struct PrimePower {
  IdealRep prime;
  int exponent;
};

// Prime factorization up to a unit, primes canonical, ordered by (norm, re).
std::vector<PrimePower> factor(GaussianInt n);
std::vector<IdealRep> divisors(GaussianInt n);
std::int64_t tau_div(GaussianInt n);
// Moebius function on ideals.
int moebius(GaussianInt n);

inline constexpr std::int64_t kDefaultAnnulusCap = 1'000'000;

// Ideal representatives with N1 < |gen| <= N2, ordered by (norm, re).
std::vector<IdealRep> annulus(double n1, double n2, std::int64_t cap = kDefaultAnnulusCap);

// Rational integer helpers used by factor().
bool is_prime_u64(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

std::string to_string(GaussianInt z);
// Strict literal grammar [+-]?digits[+-]digits i, e.g. "3-2i", "-1+0i".
GaussianInt parse_gaussian(std::string_view s);
// Complex float literal: "a+bi" with decimal parts, a plain real, or polar "mod@arg".
std::complex<double> parse_complex(std::string_view s);
// "a+bi" with 17 significant digits, readable by parse_complex.
std::string to_string_complex(std::complex<double> z);

}  // namespace gls
