#include "quintic/residue_symbols.hpp"

#include "quintic/error.hpp"
#include "quintic/integer.hpp"

namespace quintic {

namespace {

std::uint64_t mod_p(const mpz_class& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

CycInt rational(std::uint64_t v) { return CycInt(mpz_class(static_cast<unsigned long>(v))); }

}  // namespace

ResidueField::ResidueField(const CycPrime& q) : p_(q.rational_prime), f_(q.residue_degree) {
  if (p_ == 5) throw Error(ErrorCode::SymbolUndefined, "no residue symbol at lambda");
  switch (f_) {
    case 1:
      for (std::uint64_t c : nt::order_five_elements(p_)) {
        if (divides(q.element, CycInt::zeta() - rational(c))) {
          modulus_ = {(p_ - c) % p_, 1};
          zeta_ = {c};
          break;
        }
      }
      break;
    case 2:
      for (std::uint64_t t : nt::golden_roots(p_)) {
        CycInt factor(CycInt::Coefficients{1, -mpz_class(static_cast<unsigned long>(t)), 1, 0});
        if (divides(q.element, factor)) {
          modulus_ = {1, (p_ - t) % p_, 1};
          zeta_ = {0, 1};
          break;
        }
      }
      break;
    case 4:
      modulus_ = {1, 1, 1, 1, 1};
      zeta_ = {0, 1, 0, 0};
      break;
    default:
      break;
  }
  if (zeta_.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "no factor of Phi_5 mod " + std::to_string(p_) + " matches " +
                    q.element.to_string());
  }
}

mpz_class ResidueField::order() const {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p_, static_cast<unsigned long>(f_));
  return out;
}

ResidueField::Element ResidueField::one() const {
  Element e(f_, 0);
  e[0] = 1 % p_;
  return e;
}

bool ResidueField::is_zero(const Element& a) const {
  for (auto v : a) {
    if (v != 0) return false;
  }
  return true;
}

ResidueField::Element ResidueField::add(const Element& a, const Element& b) const {
  Element out(f_);
  for (int i = 0; i < f_; ++i) out[i] = (a[i] + b[i]) % p_;
  return out;
}

ResidueField::Element ResidueField::mul(const Element& a, const Element& b) const {
  std::vector<std::uint64_t> prod(2 * f_ - 1, 0);
  for (int i = 0; i < f_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f_; ++j) {
      prod[i + j] = (prod[i + j] + nt::mul_mod(a[i], b[j], p_)) % p_;
    }
  }
  for (int k = 2 * f_ - 2; k >= f_; --k) {
    const std::uint64_t top = prod[k];
    if (top == 0) continue;
    // x^f = -(modulus_0 + ... + modulus_{f-1} x^{f-1})
    for (int i = 0; i < f_; ++i) {
      const std::uint64_t sub = nt::mul_mod(top, modulus_[i], p_);
      prod[k - f_ + i] = (prod[k - f_ + i] + p_ - sub) % p_;
    }
    prod[k] = 0;
  }
  prod.resize(f_);
  return prod;
}

ResidueField::Element ResidueField::pow(Element base, const mpz_class& exponent) const {
  Element result = one();
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul(result, base);
  }
  return result;
}

ResidueField::Element ResidueField::reduce(const CycInt& a) const {
  Element out = zero();
  Element power = one();
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint64_t c = mod_p(a[i], p_);
    if (c != 0) {
      Element term = power;
      for (auto& v : term) v = nt::mul_mod(v, c, p_);
      out = add(out, term);
    }
    power = mul(power, zeta_);
  }
  return out;
}

ResidueField::Element ResidueField::from_index(std::uint64_t index) const {
  Element out(f_);
  for (int i = 0; i < f_; ++i) {
    out[i] = index % p_;
    index /= p_;
  }
  return out;
}

std::uint64_t ResidueField::to_index(const Element& a) const {
  std::uint64_t index = 0;
  for (int i = f_; i-- > 0;) index = index * p_ + a[i];
  return index;
}

int quintic_symbol(const CycInt& a, const ResidueField& field) {
  const auto x = field.reduce(a);
  if (field.is_zero(x)) {
    throw Error(ErrorCode::NotCoprime, a.to_string() + " vanishes in the residue field");
  }
  mpz_class exponent = field.order() - 1;
  mpz_divexact_ui(exponent.get_mpz_t(), exponent.get_mpz_t(), 5);
  const auto y = field.pow(x, exponent);
  auto zeta_power = field.one();
  for (int i = 0; i < 5; ++i) {
    if (zeta_power == y) return i;
    zeta_power = field.mul(zeta_power, field.zeta_image());
  }
  throw Error(ErrorCode::InternalInvariant, "Euler criterion left the fifth roots of unity");
}

int quintic_symbol(const CycInt& a, const CycPrime& q) {
  if (q.rational_prime == 5) throw Error(ErrorCode::SymbolUndefined, "no residue symbol at lambda");
  return quintic_symbol(a, ResidueField(q));
}

bool is_quintic_residue_mod_p(long long a, std::uint64_t p) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::CompositeInput, std::to_string(p) + " is not prime");
  if (p == 5) throw Error(ErrorCode::SymbolUndefined, "no residue symbol at 5");
  if (p % 5 == 2 || p % 5 == 3) {
    throw Error(ErrorCode::EverythingIsAResidue,
                "every unit mod " + std::to_string(p) + " is a fifth power (5 does not divide p^2 - 1)");
  }
  const long long pp = static_cast<long long>(p);
  const std::uint64_t r = static_cast<std::uint64_t>(((a % pp) + pp) % pp);
  if (r == 0) throw Error(ErrorCode::NotCoprime, std::to_string(p) + " divides " + std::to_string(a));
  if (p % 5 == 1) return nt::pow_mod(r, (p - 1) / 5, p) == 1;
  return quintic_symbol(rational(r), factor_rational_prime(p).front()) == 0;
}

FifthPowerTable::FifthPowerTable(const ResidueField& field) : field_(field) {
  const mpz_class order = field.order();
  if (order > kBruteForceFieldBound) {
    throw Error(ErrorCode::FieldTooLarge,
                "residue field of order " + order.get_str() + " exceeds the brute-force bound");
  }
  const std::uint64_t size = order.get_ui();
  const std::uint64_t group = size - 1;

  // First element, by index, whose successive powers reach every unit.
  for (std::uint64_t g = 1; g < size; ++g) {
    const auto gen = field.from_index(g);
    log_.assign(size, 0);
    std::vector<bool> seen(size, false);
    auto x = field.one();
    std::uint64_t k = 0;
    for (; k < group; ++k) {
      const std::uint64_t idx = field.to_index(x);
      if (seen[idx]) break;
      seen[idx] = true;
      log_[idx] = k;
      x = field.mul(x, gen);
    }
    if (k == group) break;
    if (g + 1 == size) throw Error(ErrorCode::InternalInvariant, "residue field has no generator");
  }

  for (std::uint64_t idx = 1; idx < size; ++idx) count_ += log_[idx] % 5 == 0;
  zeta_log_ = log_[field.to_index(field.zeta_image())];
  if (zeta_log_ % (group / 5) != 0) {
    throw Error(ErrorCode::InternalInvariant, "image of zeta does not have order 5");
  }
}

std::uint64_t FifthPowerTable::log_of(const CycInt& a) const {
  const auto x = field_.reduce(a);
  if (field_.is_zero(x)) {
    throw Error(ErrorCode::NotCoprime, a.to_string() + " vanishes in the residue field");
  }
  return log_[field_.to_index(x)];
}

bool FifthPowerTable::contains(const ResidueField::Element& a) const {
  return !field_.is_zero(a) && log_[field_.to_index(a)] % 5 == 0;
}

int FifthPowerTable::coset(const CycInt& a) const {
  if (zeta_is_fifth_power()) {
    throw Error(ErrorCode::SymbolUndefined, "zeta is a fifth power in this residue field");
  }
  auto x = field_.reduce(a);
  if (field_.is_zero(x)) {
    throw Error(ErrorCode::NotCoprime, a.to_string() + " vanishes in the residue field");
  }
  // zeta^-1 = zeta^4
  auto zeta_inv = field_.mul(field_.zeta_image(), field_.zeta_image());
  zeta_inv = field_.mul(zeta_inv, zeta_inv);
  for (int j = 0; j < 5; ++j) {
    if (contains(x)) return j;
    x = field_.mul(x, zeta_inv);
  }
  throw Error(ErrorCode::InternalInvariant, "no fifth-power coset contains the element");
}

int FifthPowerTable::symbol(const CycInt& a) const {
  // a^((N-1)/5) = g^(log a * (N-1)/5) and zeta = g^(m (N-1)/5), so i = log a / m mod 5.
  const std::uint64_t group = field_.order().get_ui() - 1;
  const int m = static_cast<int>((zeta_log_ / (group / 5)) % 5);
  int m_inv = 1;
  while ((m * m_inv) % 5 != 1) ++m_inv;
  return static_cast<int>((log_of(a) % 5) * m_inv % 5);
}

int brute_force_symbol(const CycInt& a, const CycPrime& q) {
  if (q.rational_prime == 5) throw Error(ErrorCode::SymbolUndefined, "no residue symbol at lambda");
  const ResidueField field(q);
  return FifthPowerTable(field).symbol(a);
}

}  // namespace quintic
