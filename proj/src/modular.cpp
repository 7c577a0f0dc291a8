#include "eqforge/modular.hpp"

#include <algorithm>
#include <numeric>

#include "eqforge/errors.hpp"

namespace eqforge::modular {

std::int64_t mod_pos(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t n) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(mod_pos(x, n)) * mod_pos(y, n) % n);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  std::int64_t result = 1 % n;
  std::int64_t b = mod_pos(base, n);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t x, std::int64_t n) {
  // extended Euclid
  std::int64_t a = mod_pos(x, n), b = n;
  std::int64_t u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = u - q * v;
    u = v;
    v = t;
  }
  if (a != 1) throw DomainError("inverse_mod: arguments not coprime");
  return mod_pos(u, n);
}

Factorization factorize(std::int64_t n) {
  if (n < 2) throw DomainError("factorize: n must be >= 2");
  Factorization f;
  f.base = n;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

bool is_in_A(std::int64_t n) {
  if (n < 2) throw DomainError("is_in_A: n must be >= 2");
  for (const auto& pp : factorize(n).factors)
    if (pp.prime % 4 != 1) return false;
  return true;
}

std::int64_t sqrt_minus_one_prime(std::int64_t p) {
  if (p < 5 || p % 4 != 1)
    throw DomainError("sqrt_minus_one_prime: p must be a prime = 1 mod 4");
  for (std::int64_t x = 2; x < p; ++x)
    if (mul_mod(x, x, p) == p - 1) return x;
  throw DomainError("sqrt_minus_one_prime: no root found (p not prime?)");
}

std::int64_t sqrt_minus_one_wilson(std::int64_t p) {
  if (p < 5 || p % 4 != 1)
    throw DomainError("sqrt_minus_one_wilson: p must be a prime = 1 mod 4");
  std::int64_t acc = 1;
  for (std::int64_t k = 2; k <= (p - 1) / 2; ++k) acc = mul_mod(acc, k, p);
  return acc;
}

std::int64_t hensel_lift(std::int64_t root, std::int64_t p, int s) {
  if (s < 1) throw DomainError("hensel_lift: exponent must be >= 1");
  std::int64_t x = mod_pos(root, p);
  if (mul_mod(x, x, p) != p - 1)
    throw DomainError("hensel_lift: root^2 != -1 (mod p)");
  if (mod_pos(2 * x, p) == 0)
    throw DomainError("hensel_lift: root is not simple (2*root = 0 mod p)");
  std::int64_t mod = p;
  for (int k = 2; k <= s; ++k) {
    mod *= p;
    // Newton step for f(x) = x^2 + 1 at modulus p^k.
    std::int64_t fx = mod_pos(mul_mod(x, x, mod) + 1, mod);
    std::int64_t dfx_inv = inverse_mod(2 * x, mod);
    x = mod_pos(x - mul_mod(fx, dfx_inv, mod), mod);
  }
  return x;
}

std::int64_t crt_combine(std::span<const std::int64_t> residues,
                         std::span<const std::int64_t> moduli) {
  if (residues.size() != moduli.size() || residues.empty())
    throw DomainError("crt_combine: size mismatch or empty input");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (std::gcd(moduli[i], moduli[j]) != 1)
        throw DomainError("crt_combine: moduli not pairwise coprime");

  std::int64_t x = mod_pos(residues[0], moduli[0]);
  std::int64_t m = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const std::int64_t mi = moduli[i];
    const std::int64_t ri = mod_pos(residues[i], mi);
    // x + m*t = ri (mod mi)
    const std::int64_t t = mul_mod(mod_pos(ri - x, mi), inverse_mod(m, mi), mi);
    x += m * t;
    m *= mi;
  }
  return mod_pos(x, m);
}

RhoWitness rho_for(std::int64_t a) {
  if (!is_in_A(a)) throw DomainError("rho_for: a has a prime factor != 1 mod 4");

  const Factorization f = factorize(a);
  std::vector<std::int64_t> moduli, roots;
  for (const auto& pp : f.factors) {
    std::int64_t m = 1;
    for (int i = 0; i < pp.exponent; ++i) m *= pp.prime;
    moduli.push_back(m);
    roots.push_back(hensel_lift(sqrt_minus_one_prime(pp.prime), pp.prime, pp.exponent));
  }

  // Every square root of -1 mod a arises from a sign choice per prime power.
  std::int64_t best = -1;
  const std::size_t r = roots.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<std::int64_t> chosen(r);
    for (std::size_t i = 0; i < r; ++i)
      chosen[i] = (mask >> i) & 1 ? moduli[i] - roots[i] : roots[i];
    const std::int64_t x = crt_combine(chosen, moduli);
    const std::int64_t odd = (x % 2 == 1) ? x : x + a;
    if (best < 0 || odd < best) best = odd;
  }

  RhoWitness w{a, best};
  if (mul_mod(w.rho, w.rho, a) != a - 1 || w.rho % 2 != 1 || w.rho >= 2 * a)
    throw InternalError("rho_for: constructed witness fails its invariants");
  return w;
}

CongruenceReport congruence_suite(std::int64_t a, std::int64_t rho) {
  if (a < 2 || rho % 2 != 1 || mul_mod(rho, rho, a) != a - 1)
    throw DomainError("congruence_suite: invalid witness");

  const std::array<std::int64_t, 10> lhs = {
      rho - 1, 2 * (rho - 1), rho + 1, 2 * (rho + 1), 2 * rho,
      4 * rho, rho - 3,       3 * rho - 1, rho + 3,   3 * rho + 1};

  CongruenceReport rep;
  rep.a = a;
  rep.rho = rho;
  const std::int64_t m = 2 * a;
  const bool special = (a == 5 && rho == 3);
  rep.all_pass = true;
  for (int i = 0; i < 10; ++i) {
    CongruenceItem& item = rep.items[static_cast<std::size_t>(i)];
    item.index = i + 1;
    item.lhs = lhs[static_cast<std::size_t>(i)];
    item.lhs_mod = mod_pos(item.lhs, m);
    item.equals_zero = (item.lhs_mod == 0);
    item.predicted_zero = special && (item.index == 7 || item.index == 10);
    item.pass = (item.equals_zero == item.predicted_zero);
    rep.all_pass = rep.all_pass && item.pass;
  }
  return rep;
}

} // namespace eqforge::modular
