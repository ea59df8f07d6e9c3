#include "hyhlab/numtheory.hpp"

#include <array>
#include <random>

#include "hyhlab/error.hpp"

namespace hyhlab::nt {
namespace {

constexpr unsigned kSieveLimit = 1000;

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i < kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = i * i; j < kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_round(const BigUint& n, const BigUint& n_minus_1, const BigUint& d, unsigned s,
                        const BigUint& base) {
  BigUint x = pow_mod(base, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

BigUint gcd(const BigUint& a, const BigUint& b) {
  BigUint g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho. Returns a non-trivial divisor of the odd
// composite n; `spent` accumulates iterations against the shared budget.
BigUint brent_split(const BigUint& n, std::uint64_t& spent, std::uint64_t budget) {
  constexpr std::uint64_t kBatch = 128;
  for (unsigned long c = 1;; ++c) {
    BigUint y = 2, x, ys, g = 1, q = 1;
    std::uint64_t r = 1;
    auto step = [&](const BigUint& v) -> BigUint { return (v * v + c) % n; };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          BigUint diff = x > y ? BigUint(x - y) : BigUint(y - x);
          q = q * diff % n;
        }
        spent += lim;
        if (spent > budget) {
          throw Error(Errc::FactoringBudgetExceeded,
                      "Pollard-rho budget exhausted on " + to_hex(n));
        }
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // Batch overshot: retrace one step at a time from the saved point.
      do {
        ys = step(ys);
        BigUint diff = x > ys ? BigUint(x - ys) : BigUint(ys - x);
        g = gcd(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigUint& n, Factorization& out, std::uint64_t& spent,
                 std::uint64_t budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigUint d = brent_split(n, spent, budget);
  factor_into(d, out, spent, budget);
  factor_into(n / d, out, spent, budget);
}

}  // namespace

BigUint mod(const BigUint& v, const BigUint& m) {
  BigUint r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigUint pow_mod(const BigUint& base, const BigUint& exp, const BigUint& m) {
  BigUint r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigUint mod_inverse(const BigUint& a, const BigUint& m) {
  if (m < 2) throw Error(Errc::InvalidModulus, "modulus must be at least 2");
  BigUint old_r = mod(a, m), r = m;
  BigUint old_s = 1, s = 0;
  while (r != 0) {
    BigUint quot = old_r / r;
    BigUint tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(Errc::NotInvertible, to_hex(a) + " has no inverse modulo " + to_hex(m));
  }
  return mod(old_s, m);
}

std::optional<BigUint> sqrt_mod(const BigUint& a_in, const BigUint& p) {
  if (!is_prime(p)) throw Error(Errc::InvalidModulus, to_hex(p) + " is not prime");
  const BigUint a = mod(a_in, p);
  if (p == 2 || a == 0) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  BigUint root;
  if (p % 4 == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    // p - 1 = q * 2^s with q odd.
    BigUint q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    BigUint z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    unsigned m = s;
    BigUint c = pow_mod(z, q, p);
    BigUint t = pow_mod(a, q, p);
    root = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      unsigned i = 0;
      BigUint t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        ++i;
      }
      BigUint b = c;
      for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      root = root * b % p;
    }
  }
  BigUint other = p - root;
  return root < other ? root : other;
}

bool is_prime(const BigUint& n) {
  if (n < 2) return false;
  for (unsigned sp : small_primes()) {
    if (n == sp) return true;
    if (n % sp == 0) return false;
  }
  if (n < BigUint(kSieveLimit) * kSieveLimit) return true;

  const BigUint n_minus_1 = n - 1;
  BigUint d = n_minus_1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  static constexpr std::array<unsigned, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned base : kBases) {
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
  }
  // Seeded from n so the verdict is reproducible run to run.
  std::mt19937_64 engine(mpz_get_ui(n.get_mpz_t()) ^ 0x6a09e667f3bcc908ULL);
  gmp_randclass gen(gmp_randinit_mt);
  gen.seed(static_cast<unsigned long>(engine()));
  const BigUint span = n - 3;
  for (int round = 0; round < kRandomRounds; ++round) {
    BigUint base = gen.get_z_range(span) + 2;
    if (!miller_rabin_round(n, n_minus_1, d, s, base)) return false;
  }
  return true;
}

BigUint crt_combine(const std::vector<std::pair<BigUint, BigUint>>& residues) {
  for (const auto& [value, modulus] : residues) {
    if (modulus < 1) throw Error(Errc::InvalidArgument, "CRT modulus must be positive");
    if (value < 0 || value >= modulus) {
      throw Error(Errc::InvalidArgument,
                  "residue " + to_hex(value) + " out of range for modulus " + to_hex(modulus));
    }
  }
  for (std::size_t i = 0; i < residues.size(); ++i) {
    for (std::size_t j = i + 1; j < residues.size(); ++j) {
      if (gcd(residues[i].second, residues[j].second) != 1) {
        throw Error(Errc::NonCoprimeModuli, to_hex(residues[i].second) + " and " +
                                                to_hex(residues[j].second) + " share a factor");
      }
    }
  }
  BigUint x = 0, product = 1;
  for (const auto& [value, modulus] : residues) {
    if (modulus == 1) continue;
    BigUint step = mod((value - x) * mod_inverse(mod(product, modulus), modulus), modulus);
    x += product * step;
    product *= modulus;
  }
  return x;
}

Factorization factor(const BigUint& n, const FactorOptions& options) {
  if (n < 1) throw Error(Errc::InvalidArgument, "factor needs n >= 1");
  Factorization out;
  BigUint rest = n;
  for (unsigned sp : small_primes()) {
    while (rest % sp == 0) {
      ++out[BigUint(sp)];
      rest /= sp;
    }
  }
  std::uint64_t spent = 0;
  factor_into(rest, out, spent, options.rho_budget);
  return out;
}

BigUint isqrt(const BigUint& v) {
  if (v < 0) throw Error(Errc::InvalidArgument, "isqrt of a negative value");
  BigUint r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

}  // namespace hyhlab::nt
