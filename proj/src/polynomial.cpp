#include "ctrz/polynomial.hpp"

#include <map>
#include <numeric>

#include "ctrz/error.hpp"

namespace ctrz {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.empty() || den.back() != 1) throw InputError("divisor must be monic");
  IntPoly rem = num;
  trim(rem);
  if (rem.size() < den.size()) {
    if (!rem.empty()) throw InconsistencyError("polynomial division is not exact");
    return {};
  }
  IntPoly quot(rem.size() - den.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt c = rem[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
  }
  trim(rem);
  if (!rem.empty()) throw InconsistencyError("polynomial division is not exact");
  trim(quot);
  return quot;
}

IntPoly cyclotomic_polynomial(unsigned e, unsigned cap) {
  if (e == 0) throw InputError("conductor must be positive");
  if (e > cap) throw InputError("conductor " + std::to_string(e) + " exceeds cap " + std::to_string(cap));
  std::map<unsigned, IntPoly> memo;
  // divisors in increasing order, so every Φ_d with d | n is ready when needed
  for (unsigned n = 1; n <= e; ++n) {
    if (e % n != 0) continue;
    IntPoly value(n + 1);
    value[0] = -1;
    value[n] = 1;
    for (const auto& [d, phi_d] : memo)
      if (n % d == 0) value = poly_exact_div(value, phi_d);
    memo.emplace(n, std::move(value));
  }
  return memo.at(e);
}

std::string to_string(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const BigInt& c = p[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ctrz
