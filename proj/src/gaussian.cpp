#include "gls/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace gls {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("gaussian integer overflow"); }

std::int64_t add_chk(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t sub_chk(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t mul_chk(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) overflow();
  return static_cast<std::int64_t>(v);
}

// ceil(p / q) for q > 0.
__int128 ceil_div(__int128 p, __int128 q) {
  __int128 d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

std::int64_t floor_mod(__int128 a, std::int64_t m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// s*x + t*y = g >= 0.
std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& s, std::int64_t& t) {
  std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  s = s0;
  t = t0;
  return r0;
}

}  // namespace

GaussianInt operator+(GaussianInt a, GaussianInt b) { return {add_chk(a.re, b.re), add_chk(a.im, b.im)}; }
GaussianInt operator-(GaussianInt a, GaussianInt b) { return {sub_chk(a.re, b.re), sub_chk(a.im, b.im)}; }
GaussianInt operator-(GaussianInt a) { return {sub_chk(0, a.re), sub_chk(0, a.im)}; }

GaussianInt operator*(GaussianInt a, GaussianInt b) {
  __int128 re = static_cast<__int128>(a.re) * b.re - static_cast<__int128>(a.im) * b.im;
  __int128 im = static_cast<__int128>(a.re) * b.im + static_cast<__int128>(a.im) * b.re;
  return {narrow(re), narrow(im)};
}

std::int64_t norm(GaussianInt z) { return add_chk(mul_chk(z.re, z.re), mul_chk(z.im, z.im)); }
GaussianInt conj(GaussianInt z) { return {z.re, sub_chk(0, z.im)}; }
double modulus(GaussianInt z) { return std::hypot(static_cast<double>(z.re), static_cast<double>(z.im)); }
std::complex<double> to_complex(GaussianInt z) { return {static_cast<double>(z.re), static_cast<double>(z.im)}; }
bool is_unit(GaussianInt z) { return norm(z) == 1; }

std::pair<GaussianInt, GaussianInt> divmod(GaussianInt a, GaussianInt c) {
  if (c.is_zero()) throw std::domain_error("division by zero gaussian integer");
  const __int128 n = static_cast<__int128>(norm(c));
  // a * conj(c) = x + iy, a/c = (x + iy)/n
  const __int128 x = static_cast<__int128>(a.re) * c.re + static_cast<__int128>(a.im) * c.im;
  const __int128 y = static_cast<__int128>(a.im) * c.re - static_cast<__int128>(a.re) * c.im;
  // nearest integer with ties toward -inf: ceil(t - 1/2) = ceil((2x - n) / 2n)
  GaussianInt q{narrow(ceil_div(2 * x - n, 2 * n)), narrow(ceil_div(2 * y - n, 2 * n))};
  return {q, a - q * c};
}

GaussianInt reduce(GaussianInt a, GaussianInt c) { return divmod(a, c).second; }

bool divides(GaussianInt d, GaussianInt n) {
  if (d.is_zero()) return n.is_zero();
  return reduce(n, d).is_zero();
}

GaussianInt exact_div(GaussianInt n, GaussianInt d) {
  auto [q, r] = divmod(n, d);
  if (!r.is_zero()) throw std::domain_error("inexact gaussian division");
  return q;
}

bool congruent(GaussianInt a, GaussianInt b, GaussianInt c) { return divides(c, a - b); }

IdealRep IdealRep::of(GaussianInt z) {
  if (z.is_zero()) throw std::domain_error("canonical: zero has no ideal representative");
  for (const auto& u : kUnits) {
    GaussianInt w = u * z;
    if (w.re > 0 && w.im >= 0) return IdealRep(w);
  }
  throw std::logic_error("canonical: no associate in first quadrant");
}

std::strong_ordering operator<=>(const IdealRep& a, const IdealRep& b) {
  if (auto c = a.norm() <=> b.norm(); c != 0) return c;
  return a.gen_.re <=> b.gen_.re;
}

IdealRep canonical(GaussianInt z) { return IdealRep::of(z); }

namespace {

GaussianInt gcd_raw(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt r = reduce(a, b);
    a = b;
    b = r;
  }
  return a;
}

// Returns g and x with a*x = g mod b (Bezout coefficient of a).
GaussianInt ext_gcd_gauss(GaussianInt a, GaussianInt b, GaussianInt& x) {
  GaussianInt r0 = a, r1 = b, s0 = 1, s1 = 0;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    GaussianInt tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  x = s0;
  return r0;
}

}  // namespace

IdealRep gcd(GaussianInt a, GaussianInt b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  return canonical(gcd_raw(a, b));
}

IdealRep gcd(GaussianInt a, GaussianInt b, GaussianInt c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) throw std::domain_error("gcd(0, 0, 0) is undefined");
  return canonical(gcd_raw(gcd_raw(a, b), c));
}

GaussianInt inverse(GaussianInt a, GaussianInt c) {
  if (c.is_zero()) throw std::domain_error("inverse: zero modulus");
  GaussianInt x;
  GaussianInt g = ext_gcd_gauss(reduce(a, c), c, x);
  if (norm(g) != 1) throw std::domain_error("inverse: arguments are not coprime");
  // a*x = g (unit), so a * x * conj(g) = 1
  return reduce(x * conj(g), c);
}

ResidueSystem::ResidueSystem(GaussianInt c, std::int64_t cap) : c_(c) {
  if (c.is_zero()) throw std::domain_error("residues: zero modulus");
  const std::int64_t n = norm(c);
  if (n > cap) throw std::length_error("residues: modulus norm exceeds enumeration cap");

  // Columns of A generate the lattice c*Z[i] in the basis {1, i}.
  std::int64_t A[2][2] = {{c.re, -c.im}, {c.im, c.re}};
  std::int64_t U[2][2] = {{1, 0}, {0, 1}};
  auto row_op = [&](std::int64_t R[2][2]) {
    std::int64_t nA[2][2], nU[2][2];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        nA[i][j] = add_chk(mul_chk(R[i][0], A[0][j]), mul_chk(R[i][1], A[1][j]));
        nU[i][j] = add_chk(mul_chk(R[i][0], U[0][j]), mul_chk(R[i][1], U[1][j]));
      }
    std::copy(&nA[0][0], &nA[0][0] + 4, &A[0][0]);
    std::copy(&nU[0][0], &nU[0][0] + 4, &U[0][0]);
  };
  for (;;) {
    while (A[1][0] != 0 || A[0][1] != 0) {
      if (A[1][0] != 0) {
        std::int64_t s, t, x = A[0][0], y = A[1][0];
        std::int64_t g = ext_gcd(x, y, s, t);
        std::int64_t R[2][2] = {{s, t}, {-y / g, x / g}};
        row_op(R);
      }
      if (A[0][1] != 0) {
        std::int64_t s, t, x = A[0][0], y = A[0][1];
        std::int64_t g = ext_gcd(x, y, s, t);
        std::int64_t C[2][2] = {{s, -y / g}, {t, x / g}};
        std::int64_t nA[2][2];
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j)
            nA[i][j] = add_chk(mul_chk(A[i][0], C[0][j]), mul_chk(A[i][1], C[1][j]));
        std::copy(&nA[0][0], &nA[0][0] + 4, &A[0][0]);
      }
    }
    if (A[1][1] % A[0][0] == 0) break;
    std::int64_t R[2][2] = {{1, 1}, {0, 1}};
    row_op(R);
  }
  for (int i = 0; i < 2; ++i) {
    if (A[i][i] < 0) {
      std::int64_t R[2][2] = {{1, 0}, {0, 1}};
      R[i][i] = -1;
      row_op(R);
    }
  }
  d1_ = A[0][0];
  d2_ = A[1][1];
  std::copy(&U[0][0], &U[0][0] + 4, &u_[0][0]);

  const std::int64_t det = U[0][0] * U[1][1] - U[0][1] * U[1][0];
  // U^{-1} = det * adj(U) since det = +-1.
  const __int128 inv[2][2] = {{det * U[1][1], -det * U[0][1]}, {-det * U[1][0], det * U[0][0]}};
  elems_.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < d1_; ++i)
    for (std::int64_t j = 0; j < d2_; ++j) {
      GaussianInt z{narrow(inv[0][0] * i + inv[0][1] * j), narrow(inv[1][0] * i + inv[1][1] * j)};
      elems_.push_back(reduce(z, c));
    }
}

std::size_t ResidueSystem::index_of(GaussianInt z) const {
  const __int128 y0 = static_cast<__int128>(u_[0][0]) * z.re + static_cast<__int128>(u_[0][1]) * z.im;
  const __int128 y1 = static_cast<__int128>(u_[1][0]) * z.re + static_cast<__int128>(u_[1][1]) * z.im;
  return static_cast<std::size_t>(floor_mod(y0, d1_) * d2_ + floor_mod(y1, d2_));
}

std::size_t ResidueSystem::add(std::size_t a, std::size_t b) const {
  const std::int64_t ai = static_cast<std::int64_t>(a) / d2_, aj = static_cast<std::int64_t>(a) % d2_;
  const std::int64_t bi = static_cast<std::int64_t>(b) / d2_, bj = static_cast<std::int64_t>(b) % d2_;
  std::int64_t i = ai + bi, j = aj + bj;
  if (i >= d1_) i -= d1_;
  if (j >= d2_) j -= d2_;
  return static_cast<std::size_t>(i * d2_ + j);
}

std::size_t ResidueSystem::sub(std::size_t a, std::size_t b) const {
  const std::int64_t ai = static_cast<std::int64_t>(a) / d2_, aj = static_cast<std::int64_t>(a) % d2_;
  const std::int64_t bi = static_cast<std::int64_t>(b) / d2_, bj = static_cast<std::int64_t>(b) % d2_;
  std::int64_t i = ai - bi, j = aj - bj;
  if (i < 0) i += d1_;
  if (j < 0) j += d2_;
  return static_cast<std::size_t>(i * d2_ + j);
}

std::vector<GaussianInt> residues(GaussianInt c, std::int64_t cap) { return ResidueSystem(c, cap).elements(); }

// ---------------------------------------------------------------------------
// Rational factorization: deterministic Miller-Rabin plus Pollard-Brent.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factor_u64: zero");
  std::map<u64, int> out;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  factor_rec(n, out);
  return {out.begin(), out.end()};
}

namespace {

// Gaussian prime above a rational prime p = 1 mod 4.
GaussianInt split_prime(u64 p) {
  u64 b = 2;
  while (powmod(b, (p - 1) / 2, p) != p - 1) ++b;
  const u64 x = powmod(b, (p - 1) / 4, p);
  return gcd_raw(GaussianInt(static_cast<std::int64_t>(p)), GaussianInt(static_cast<std::int64_t>(x), 1));
}

}  // namespace

std::vector<PrimePower> factor(GaussianInt n) {
  if (n.is_zero()) throw std::domain_error("factor: zero");
  std::vector<PrimePower> out;
  auto strip = [&](GaussianInt prime) {
    int e = 0;
    while (divides(prime, n)) {
      n = exact_div(n, prime);
      ++e;
    }
    if (e > 0) out.push_back({canonical(prime), e});
  };
  for (auto [p, e] : factor_u64(static_cast<u64>(norm(n)))) {
    (void)e;
    if (p == 2) {
      strip(GaussianInt(1, 1));
    } else if (p % 4 == 3) {
      strip(GaussianInt(static_cast<std::int64_t>(p)));
    } else {
      GaussianInt pi = canonical(split_prime(p)).gen();
      strip(pi);
      strip(canonical(conj(pi)).gen());
    }
  }
  if (!is_unit(n)) throw std::logic_error("factor: incomplete factorization");
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

std::vector<IdealRep> divisors(GaussianInt n) {
  std::vector<GaussianInt> acc{GaussianInt(1)};
  for (const auto& pp : factor(n)) {
    std::vector<GaussianInt> next;
    for (const auto& d : acc) {
      GaussianInt power(1);
      for (int k = 0; k <= pp.exponent; ++k) {
        next.push_back(d * power);
        power = power * pp.prime.gen();
      }
    }
    acc.swap(next);
  }
  std::vector<IdealRep> out;
  out.reserve(acc.size());
  for (const auto& d : acc) out.push_back(canonical(d));
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t tau_div(GaussianInt n) {
  std::int64_t t = 1;
  for (const auto& pp : factor(n)) t *= pp.exponent + 1;
  return t;
}

int moebius(GaussianInt n) {
  int mu = 1;
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<IdealRep> annulus(double n1, double n2, std::int64_t cap) {
  if (!(n1 >= 0.0) || !(n2 > n1)) throw std::domain_error("annulus: need 0 <= N1 < N2");
  const long double lo = static_cast<long double>(n1) * n1;
  const long double hi = static_cast<long double>(n2) * n2;
  const long double estimate = 0.7853981633974483L * (hi - lo) + 4.0L * n2 + 4.0L;
  if (estimate > static_cast<long double>(cap)) throw std::length_error("annulus: enumeration cap exceeded");
  const auto top = static_cast<std::int64_t>(std::floor(n2)) + 1;
  std::vector<IdealRep> out;
  for (std::int64_t a = 1; a <= top; ++a)
    for (std::int64_t b = 0; b <= top; ++b) {
      const long double nn = static_cast<long double>(a) * a + static_cast<long double>(b) * b;
      if (nn > lo && nn <= hi) out.push_back(IdealRep::of(GaussianInt(a, b)));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(GaussianInt z) {
  std::string im = std::to_string(z.im);
  if (z.im >= 0) im.insert(0, "+");
  return std::to_string(z.re) + im + "i";
}

GaussianInt parse_gaussian(std::string_view s) {
  static const std::regex re(R"(^([+-]?[0-9]+)([+-][0-9]+)i$)");
  std::cmatch m;
  if (!std::regex_match(s.begin(), s.end(), m, re))
    throw std::invalid_argument("malformed gaussian integer literal: '" + std::string(s) + "'");
  try {
    return {std::stoll(m[1].str()), std::stoll(m[2].str())};
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("gaussian integer literal out of range: '" + std::string(s) + "'");
  }
}

std::complex<double> parse_complex(std::string_view s) {
  static const std::string num = R"((?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)";
  static const std::regex polar("^([+-]?" + num + ")@([+-]?" + num + ")$");
  static const std::regex rect("^([+-]?" + num + ")([+-]" + num + ")i$");
  static const std::regex real("^([+-]?" + num + ")$");
  std::cmatch m;
  if (std::regex_match(s.begin(), s.end(), m, polar)) return std::polar(std::stod(m[1].str()), std::stod(m[2].str()));
  if (std::regex_match(s.begin(), s.end(), m, rect)) return {std::stod(m[1].str()), std::stod(m[2].str())};
  if (std::regex_match(s.begin(), s.end(), m, real)) return {std::stod(m[1].str()), 0.0};
  throw std::invalid_argument("malformed complex literal: '" + std::string(s) + "'");
}

std::string to_string_complex(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace gls
