#include "quintic/integer.hpp"

#include <algorithm>

#include "quintic/error.hpp"

namespace quintic::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorCode::InvalidArgument, "inv_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3 * 10^24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<PrimePower> factor(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "factor: zero");
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; p <= kTrialDivisionBound && p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) {
    // Below bound^2 a cofactor without small factors is prime outright.
    bool proven = n <= kTrialDivisionBound * kTrialDivisionBound || is_prime(n);
    if (!proven) {
      throw Error(ErrorCode::UnprovenFactorization,
                  "cofactor " + std::to_string(n) +
                      " is composite with no factor below the trial-division bound");
    }
    out.push_back({n, 1});
  }
  return out;
}

int valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "order of zero");
  std::uint64_t order = p - 1;
  for (const auto& [q, e] : factor(p - 1)) {
    for (int i = 0; i < e; ++i) {
      if (pow_mod(a, order / q, p) == 1) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto fs = factor(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(fs.begin(), fs.end(), [&](const PrimePower& f) {
      return pow_mod(g, (p - 1) / f.prime, p) != 1;
    });
    if (ok) return g;
  }
  throw Error(ErrorCode::InternalInvariant, "no primitive root found");
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  // Tonelli-Shanks with the smallest quadratic non-residue.
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t x = pow_mod(a, (q + 1) / 2, p);
  std::uint64_t t = pow_mod(a, q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
    x = mul_mod(x, b, p);
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    m = i;
  }
  return std::min(x, p - x);
}

std::vector<std::uint64_t> order_five_elements(std::uint64_t p) {
  if (p % 5 != 1) throw Error(ErrorCode::WrongCongruenceClass, "p must be 1 mod 5");
  std::uint64_t c = 1;
  for (std::uint64_t x = 2; c == 1; ++x) c = pow_mod(x, (p - 1) / 5, p);
  std::vector<std::uint64_t> out{c};
  for (int i = 0; i < 3; ++i) out.push_back(mul_mod(out.back(), c, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> golden_roots(std::uint64_t p) {
  if (p % 5 != 4) throw Error(ErrorCode::WrongCongruenceClass, "p must be 4 mod 5");
  // t = (-1 +- sqrt 5) / 2
  const std::uint64_t s = *sqrt_mod(5, p);
  const std::uint64_t half = inv_mod(2, p);
  std::uint64_t t1 = mul_mod((s + p - 1) % p, half, p);
  std::uint64_t t2 = mul_mod((2 * p - 1 - s) % p, half, p);
  if (t1 > t2) std::swap(t1, t2);
  return {t1, t2};
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace quintic::nt
