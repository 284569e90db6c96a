#include "ctrz/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ctrz/error.hpp"

namespace ctrz {

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// r = a mod b, q = a div b; b nonzero
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, BigRational(0));
  const BigRational lead_inv = 1 / b.back();
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    BigRational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

long long mod_pos(long long a, long long m) { return ((a % m) + m) % m; }

long long pow_mod(long long base, long long exp, long long m) {
  long long result = 1 % m;
  base = mod_pos(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned conductor, unsigned cap)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor, cap)) {
  const unsigned n = degree();
  powers_.assign(conductor_, std::vector<BigInt>(n, BigInt(0)));
  std::vector<BigInt> current(n, BigInt(0));
  current[0] = 1;
  // multiply by x and reduce with the monic modulus
  for (unsigned m = 0; m < conductor_; ++m) {
    powers_[m] = current;
    BigInt top = current[n - 1];
    for (unsigned i = n - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < n; ++i) current[i] -= top * modulus_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned conductor, unsigned cap) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  if (conductor == 0) throw InputError("conductor must be positive");
  if (conductor > cap)
    throw InputError("conductor " + std::to_string(conductor) + " exceeds cap " + std::to_string(cap));
  std::lock_guard lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(conductor, cap);
  cache.emplace(conductor, field);
  return field;
}

Cyclotomic::Cyclotomic() : Cyclotomic(1u, BigRational(0)) {}

Cyclotomic::Cyclotomic(const BigRational& q) : Cyclotomic(1u, q) {}

Cyclotomic::Cyclotomic(unsigned conductor, const BigRational& q)
    : field_(CyclotomicField::get(conductor)), coeffs_(field_->degree(), BigRational(0)) {
  coeffs_[0] = q;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<BigRational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zeta(unsigned conductor, long long exponent) {
  auto field = CyclotomicField::get(conductor);
  const auto& p = field->power(static_cast<unsigned>(mod_pos(exponent, conductor)));
  std::vector<BigRational> coeffs(p.begin(), p.end());
  return Cyclotomic(std::move(field), std::move(coeffs));
}

Cyclotomic Cyclotomic::from_coeffs(unsigned conductor, std::vector<BigRational> coeffs) {
  auto field = CyclotomicField::get(conductor);
  if (coeffs.size() != field->degree())
    throw InputError("conductor " + std::to_string(conductor) + " needs " +
                     std::to_string(field->degree()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  for (auto& c : coeffs) c.canonicalize();
  return Cyclotomic(std::move(field), std::move(coeffs));
}

Cyclotomic Cyclotomic::reduce(std::shared_ptr<const CyclotomicField> field,
                              std::vector<BigRational> by_exponent) {
  const unsigned n = field->degree();
  const unsigned e = field->conductor();
  std::vector<BigRational> out(n, BigRational(0));
  for (std::size_t m = 0; m < by_exponent.size(); ++m) {
    const BigRational& c = by_exponent[m];
    if (c == 0) continue;
    if (m < n) {
      out[m] += c;
      continue;
    }
    const auto& p = field->power(static_cast<unsigned>(m % e));
    for (unsigned i = 0; i < n; ++i)
      if (p[i] != 0) out[i] += c * p[i];
  }
  return Cyclotomic(std::move(field), std::move(out));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const BigRational& c) { return c == 0; });
}

BigRational Cyclotomic::rational() const {
  if (!is_rational()) throw ValidationError("value " + to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(unsigned conductor) const {
  const unsigned from = this->conductor();
  if (conductor == from) return *this;
  if (conductor % from != 0)
    throw InputError("cannot lift conductor " + std::to_string(from) + " to " + std::to_string(conductor));
  auto field = CyclotomicField::get(conductor);
  const unsigned step = conductor / from;
  std::vector<BigRational> by_exponent(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1,
                                       BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) by_exponent[i * step] = coeffs_[i];
  return reduce(std::move(field), std::move(by_exponent));
}

Cyclotomic Cyclotomic::galois(long long k) const {
  const long long e = conductor();
  if (std::gcd(mod_pos(k, e), e) != 1 && e > 1)
    throw InputError("Galois exponent " + std::to_string(k) + " is not coprime to " + std::to_string(e));
  std::vector<BigRational> by_exponent(static_cast<std::size_t>(e), BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      by_exponent[static_cast<std::size_t>(mod_pos(static_cast<long long>(i) * k, e))] += coeffs_[i];
  return reduce(field_, std::move(by_exponent));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ValidationError("division by zero");
  if (is_rational()) return Cyclotomic(field_->conductor(), 1 / coeffs_[0]);
  // extended Euclid on (Φ_e, a), tracking the cofactor of a
  RatPoly r0(field_->modulus().begin(), field_->modulus().end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{BigRational(1)};
  RatPoly q, r;
  while (r1.size() > 1) {
    divmod(r0, r1, q, r);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InconsistencyError("element shares a factor with the cyclotomic polynomial");
  BigRational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return reduce(field_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(unsigned k) const {
  Cyclotomic result(conductor(), BigRational(1));
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void Cyclotomic::align_with(Cyclotomic& other) {
  if (field_ == other.field_) return;
  const unsigned e = std::lcm(conductor(), other.conductor());
  if (e != conductor()) *this = lift(e);
  if (e != other.conductor()) other = other.lift(e);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_rational() && conductor() % rhs.conductor() == 0) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  Cyclotomic other = rhs;
  align_with(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  Cyclotomic other = rhs;
  align_with(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  // rationals keep the conductor of the other operand
  if (rhs.is_rational() && conductor() % rhs.conductor() == 0) {
    const BigRational q = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  if (is_rational() && rhs.conductor() % conductor() == 0) {
    const BigRational q = coeffs_[0];
    field_ = rhs.field_;
    coeffs_ = rhs.coeffs_;
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  Cyclotomic other = rhs;
  align_with(other);
  const std::size_t n = coeffs_.size();
  std::vector<BigRational> by_exponent(2 * n - 1, BigRational(0));
  BigRational term;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.coeffs_[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), coeffs_[i].get_mpq_t(), other.coeffs_[j].get_mpq_t());
      by_exponent[i + j] += term;
    }
  }
  *this = reduce(field_, std::move(by_exponent));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.field_ == rhs.field_) return lhs.coeffs_ == rhs.coeffs_;
  const unsigned e = std::lcm(lhs.conductor(), rhs.conductor());
  if (e > kDefaultConductorCap) return false;
  return lhs.lift(e).coeffs_ == rhs.lift(e).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  const std::string z = "z" + std::to_string(conductor());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += ctrz::to_string(mag);
      continue;
    }
    if (mag != 1) out += ctrz::to_string(mag) + "*";
    out += z;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int compare_lex(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) {
    const unsigned e = std::lcm(a.conductor(), b.conductor());
    return compare_lex(a.lift(e), b.lift(e));
  }
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

namespace {

std::vector<long long> odd_prime_factors(long long n) {
  std::vector<long long> primes;
  while (n % 2 == 0) n /= 2;
  for (long long p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_squarefree(long long n) {
  n = n < 0 ? -n : n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

std::optional<Cyclotomic> sqrt_embedding(long long D, unsigned conductor) {
  if (D == 0 || D == 1 || !is_squarefree(D)) return std::nullopt;
  const long long mag = D < 0 ? -D : D;
  const auto primes = odd_prime_factors(mag);
  long long odd_part = 1;
  long long signed_odd = 1;  // product of p* = (-1)^((p-1)/2) p
  for (long long p : primes) {
    odd_part *= p;
    signed_odd *= (p % 4 == 1) ? p : -p;
  }
  // D / signed_odd is one of 1, -1, 2, -2
  const long long residual = D / signed_odd;
  long long needed = odd_part;
  if (residual == -1) needed = std::lcm(needed, 4LL);
  if (residual == 2 || residual == -2) needed = std::lcm(needed, 8LL);
  if (conductor % needed != 0) return std::nullopt;

  Cyclotomic root(conductor, BigRational(1));
  for (long long p : primes) {
    Cyclotomic gauss(static_cast<unsigned>(p), BigRational(0));
    for (long long a = 1; a < p; ++a) {
      const long long legendre = pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
      gauss += Cyclotomic(static_cast<long>(legendre)) * Cyclotomic::zeta(static_cast<unsigned>(p), a);
    }
    root *= gauss;
  }
  if (residual == -1) root *= Cyclotomic::zeta(4, 1);
  if (residual == 2) root *= Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
  if (residual == -2) root *= Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 3);
  return root.lift(conductor);
}

std::optional<QuadraticView> to_quadratic(const Cyclotomic& z, long long D) {
  if (z.is_rational() && D != 0 && D != 1 && is_squarefree(D))
    return QuadraticView{D, z.rational(), BigRational(0)};
  auto root = sqrt_embedding(D, z.conductor());
  if (!root) return std::nullopt;
  // an automorphism that negates √D splits z into its two components
  const long long e = z.conductor();
  std::optional<Cyclotomic> negated;
  long long k = 2;
  for (; k < e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    auto image = root->galois(k);
    if (image == -*root) break;
  }
  if (k >= e) return std::nullopt;
  const Cyclotomic image = z.galois(k);
  const Cyclotomic half(1u, BigRational(1, 2));
  const Cyclotomic a = (z + image) * half;
  BigRational scale(BigInt(1), BigInt(static_cast<long>(2 * D)));
  scale.canonicalize();
  const Cyclotomic b = (z - image) * *root * Cyclotomic(scale);
  if (!a.is_rational() || !b.is_rational()) return std::nullopt;
  QuadraticView view{D, a.rational(), b.rational()};
  if (a + b * *root != z) return std::nullopt;
  return view;
}

Cyclotomic from_quadratic(const QuadraticView& view, unsigned conductor) {
  auto root = sqrt_embedding(view.D, conductor);
  if (!root)
    throw InputError("sqrt(" + std::to_string(view.D) + ") does not embed in conductor " +
                     std::to_string(conductor));
  return Cyclotomic(conductor, view.a) + Cyclotomic(conductor, view.b) * *root;
}

std::optional<QuadraticView> find_quadratic(const Cyclotomic& z) {
  if (z.is_rational()) return std::nullopt;
  const long long e = z.conductor();
  std::vector<long long> primes = odd_prime_factors(e);
  if (e % 4 == 0) primes.insert(primes.begin(), 2);
  std::vector<long long> candidates;
  for (unsigned mask = 0; mask < (1u << primes.size()); ++mask) {
    long long d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (1u << i)) d *= primes[i];
    candidates.push_back(-d);
    if (d != 1) candidates.push_back(d);
  }
  std::sort(candidates.begin(), candidates.end(), [](long long a, long long b) {
    long long ma = a < 0 ? -a : a;
    long long mb = b < 0 ? -b : b;
    return ma != mb ? ma < mb : a < b;
  });
  for (long long d : candidates) {
    auto view = to_quadratic(z, d);
    if (view && view->b != 0) return view;
  }
  return std::nullopt;
}

std::string to_string(const QuadraticView& view) {
  BigInt q = lcm(view.a.get_den(), view.b.get_den());
  BigInt a = view.a.get_num() * (q / view.a.get_den());
  BigInt b = view.b.get_num() * (q / view.b.get_den());
  std::string root = "sqrt(" + std::to_string(view.D) + ")";
  std::string num;
  if (a != 0) num = a.get_str();
  if (b != 0) {
    if (b < 0)
      num += "-";
    else if (!num.empty())
      num += "+";
    BigInt mag = abs(b);
    if (mag != 1) num += mag.get_str() + "*";
    num += root;
  }
  if (num.empty()) num = "0";
  if (q == 1) return num;
  return "(" + num + ")/" + q.get_str();
}

std::string display(const Cyclotomic& z) {
  if (z.is_rational()) return to_string(z.rational());
  if (auto view = find_quadratic(z)) return to_string(*view);
  return z.to_string();
}

}  // namespace ctrz
