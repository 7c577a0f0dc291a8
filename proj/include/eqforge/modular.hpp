#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace eqforge::modular {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization with strictly increasing primes.
struct Factorization {
  std::int64_t base = 0;
  std::vector<PrimePower> factors;
};

// Witness for rho^2 = -1 (mod a) with rho odd, 0 < rho < 2a.
struct RhoWitness {
  std::int64_t a = 0;
  std::int64_t rho = 0;
};

// One evaluated congruence claim: lhs mod 2a together with the predicted
// outcome (zero only for items 7 and 10 at (a, rho) = (5, 3)).
struct CongruenceItem {
  int index = 0;             // 1..10
  std::int64_t lhs = 0;      // raw left-hand side before reduction
  std::int64_t lhs_mod = 0;  // lhs mod 2a, in [0, 2a)
  bool equals_zero = false;
  bool predicted_zero = false;
  bool pass = false; // observed outcome matches the prediction
};

struct CongruenceReport {
  std::int64_t a = 0;
  std::int64_t rho = 0;
  std::array<CongruenceItem, 10> items;
  bool all_pass = false;
};

std::int64_t mod_pos(std::int64_t x, std::int64_t n); // representative in [0, n)
std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n);
std::int64_t inverse_mod(std::int64_t x, std::int64_t n); // gcd(x, n) = 1

// Trial division; n >= 2.
Factorization factorize(std::int64_t n);

// True iff every prime factor of n is congruent 1 mod 4.
bool is_in_A(std::int64_t n);

// Smallest x in (0, p) with x^2 = -1 (mod p); p prime, p = 1 mod 4.
std::int64_t sqrt_minus_one_prime(std::int64_t p);

// Cross-check construction via Wilson's theorem: ((p-1)/2)! mod p.
std::int64_t sqrt_minus_one_wilson(std::int64_t p);

// Lifts a root of x^2 + 1 = 0 (mod p) to a root mod p^s. The lifted root is
// congruent to the input mod p. p must be odd (the root is simple).
std::int64_t hensel_lift(std::int64_t root, std::int64_t p, int s);

// Chinese remainder combination for pairwise coprime moduli.
std::int64_t crt_combine(std::span<const std::int64_t> residues,
                         std::span<const std::int64_t> moduli);

// Deterministic witness: the smallest odd rho in (0, 2a) with
// rho^2 = -1 (mod a). Constructed via per-prime-power roots, Hensel lifting
// and CRT over all sign choices.
RhoWitness rho_for(std::int64_t a);

// Evaluates the ten congruence claims for a given witness.
CongruenceReport congruence_suite(std::int64_t a, std::int64_t rho);

} // namespace eqforge::modular
