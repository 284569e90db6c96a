#include "ctrz/dixon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ctrz/error.hpp"

namespace ctrz {

PrimeFieldMatrix ClassAlgebra::matrix_mod_p(std::size_t i, std::uint64_t p) const {
  PrimeFieldMatrix m(p, r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) m.set(j, k, static_cast<long long>(constants[i][j][k] % p));
  return m;
}

ClassAlgebra class_constants(const FiniteGroup& g, const ClassSet& cs) {
  ClassAlgebra ca;
  ca.r = cs.count();
  for (std::size_t c = 0; c < ca.r; ++c) {
    ca.sizes.push_back(cs[c].size);
    ca.inverse_class.push_back(cs.inverse_class(c));
  }
  ca.constants.assign(ca.r, std::vector<std::vector<std::uint64_t>>(ca.r, std::vector<std::uint64_t>(ca.r, 0)));
  for (std::size_t k = 0; k < ca.r; ++k) {
    const Permutation& z = cs[k].representative;
    for (std::size_t i = 0; i < ca.r; ++i) {
      for (std::size_t x : cs[i].members) {
        // y = x^{-1} z is the unique partner with xy = z
        const std::size_t y = g.index(g.element(x).inverse() * z);
        ++ca.constants[i][cs.class_of(y)][k];
      }
    }
  }
  return ca;
}

std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order, std::uint64_t search_cap) {
  if (exponent == 0) throw InputError("exponent must be positive");
  // p > 2 sqrt(order)  <=>  p^2 > 4 order
  for (std::uint64_t p = exponent + 1; p <= search_cap; p += exponent) {
    if (static_cast<uint128>(p) * p <= static_cast<uint128>(4) * order) continue;
    if (is_prime(p)) return p;
  }
  throw InputError("no suitable prime below the search cap");
}

namespace {

using Subspace = std::vector<ModVector>;  // rows in reduced echelon form

std::vector<std::size_t> leading_positions(const Subspace& basis) {
  std::vector<std::size_t> out;
  for (const auto& v : basis) {
    std::size_t j = 0;
    while (v[j] == 0) ++j;
    out.push_back(j);
  }
  return out;
}

std::vector<Subspace> split(const Subspace& basis, const PrimeFieldMatrix& m) {
  const std::uint64_t p = m.modulus();
  const std::size_t dim = basis.size();
  const auto lead = leading_positions(basis);
  // restriction of M to the subspace, in the echelon basis
  PrimeFieldMatrix restricted(p, dim, dim);
  for (std::size_t l = 0; l < dim; ++l) {
    const ModVector image = m.apply(basis[l]);
    for (std::size_t k = 0; k < dim; ++k) restricted.set(k, l, static_cast<long long>(image[lead[k]]));
  }
  std::vector<Subspace> pieces;
  std::size_t covered = 0;
  for (std::uint64_t lambda = 0; lambda < p && covered < dim; ++lambda) {
    PrimeFieldMatrix shifted = restricted;
    for (std::size_t k = 0; k < dim; ++k)
      shifted.set(k, k, static_cast<long long>(restricted.at(k, k)) - static_cast<long long>(lambda));
    if (shifted.determinant() != 0) continue;
    Subspace piece;
    for (const auto& coords : nullspace_mod_p(shifted)) {
      ModVector v(basis.front().size(), 0);
      for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + coords[l] * basis[l][j]) % p;
      piece.push_back(std::move(v));
    }
    covered += piece.size();
    pieces.push_back(echelon_basis(std::move(piece), p));
  }
  if (covered != dim) throw InconsistencyError("class matrix is not diagonalizable mod p");
  return pieces;
}

}  // namespace

EigenData common_eigenbasis(const ClassAlgebra& ca, std::uint64_t p) {
  const std::size_t r = ca.r;
  Subspace full;
  for (std::size_t i = 0; i < r; ++i) {
    ModVector e(r, 0);
    e[i] = 1;
    full.push_back(std::move(e));
  }
  std::vector<Subspace> spaces{full};
  for (std::size_t i = 0; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.size() == 1; })) break;
    const PrimeFieldMatrix m = ca.matrix_mod_p(i, p);
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, m)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r)
    throw InconsistencyError("eigenspace splitting stalled at " + std::to_string(spaces.size()) + " of " +
                             std::to_string(r) + " characters");

  EigenData ed;
  ed.p = p;
  for (const auto& s : spaces) {
    ModVector v = s.front();
    if (v[0] == 0) throw InconsistencyError("common eigenvector vanishes at the identity class");
    const std::uint64_t scale = inverse_mod(v[0], p);
    for (auto& x : v) x = x * scale % p;
    // (M_i v)_identity = v_i, so v is its own eigenvalue vector
    for (std::size_t i = 0; i < r; ++i) {
      const ModVector image = ca.matrix_mod_p(i, p).apply(v);
      for (std::size_t j = 0; j < r; ++j)
        if (image[j] != v[i] * v[j] % p)
          throw InconsistencyError("vector is not a common eigenvector of the class matrices");
    }
    ed.eigenvalues.push_back(v);
    ed.eigenvectors.push_back(std::move(v));
  }
  return ed;
}

std::uint64_t root_of_unity_mod_p(std::uint64_t exponent, std::uint64_t p) {
  if ((p - 1) % exponent != 0) throw InputError("p is not 1 mod the exponent");
  return pow_mod(primitive_root(p), (p - 1) / exponent, p);
}

std::uint64_t reduce_mod_p(const Cyclotomic& z, std::uint64_t p, std::uint64_t eta) {
  const BigInt modulus(static_cast<unsigned long>(p));
  BigInt acc = 0;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    const BigRational& c = z.coeffs()[i];
    if (c == 0) continue;
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), c.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw InputError("denominator divisible by p");
    acc += c.get_num() * den_inv * static_cast<unsigned long>(pow_mod(eta, i, p));
  }
  acc %= modulus;
  if (acc < 0) acc += modulus;
  return acc.get_ui();
}

CharacterTable lift_character_values(const EigenData& ed, const ClassSet& cs, std::uint64_t exponent) {
  const std::uint64_t p = ed.p;
  const std::size_t r = cs.count();
  const auto e = static_cast<unsigned>(exponent);
  std::uint64_t order = 0;
  for (const auto& c : cs.classes()) order += c.size;
  std::uint64_t max_degree = 0;
  while ((max_degree + 1) * (max_degree + 1) <= order) ++max_degree;

  const std::uint64_t eta_e = root_of_unity_mod_p(exponent, p);
  std::vector<Cyclotomic> zeta_powers;
  for (unsigned m = 0; m < e; ++m) zeta_powers.push_back(Cyclotomic::zeta(e, m));

  CharacterTable t;
  t.group_order = order;
  t.conductor = e;
  const auto labels = class_labels(cs);
  for (std::size_t c = 0; c < r; ++c)
    t.classes.push_back(ClassInfo{labels[c], cs[c].size, cs[c].element_order, format_cycles(cs[c].representative)});

  for (const auto& omega : ed.eigenvalues) {
    // Σ_i ω_i ω_{i*} / |C_i| = |G| / d²
    std::uint64_t norm = 0;
    for (std::size_t i = 0; i < r; ++i)
      norm = (norm + omega[i] * omega[cs.inverse_class(i)] % p * inverse_mod(cs[i].size % p, p)) % p;
    const std::uint64_t d_squared = order % p * inverse_mod(norm, p) % p;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d)
      if (d * d % p == d_squared) {
        degree = d;
        break;
      }
    if (degree == 0) throw InconsistencyError("no integer square root for a character degree");

    ModVector value_mod_p(r);
    for (std::size_t j = 0; j < r; ++j) value_mod_p[j] = degree * omega[j] % p * inverse_mod(cs[j].size % p, p) % p;

    std::vector<Cyclotomic> row;
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t o = cs[j].element_order;
      const std::uint64_t step = exponent / o;
      const std::uint64_t eta_o = pow_mod(eta_e, step, p);
      const std::uint64_t o_inv = inverse_mod(o % p, p);
      Cyclotomic value(e, BigRational(0));
      for (std::uint64_t m = 0; m < o; ++m) {
        // multiplicity of the eigenvalue ζ_o^m
        std::uint64_t sum = 0;
        for (std::uint64_t t_pow = 0; t_pow < o; ++t_pow) {
          const std::uint64_t chi_t = value_mod_p[cs.power_map(static_cast<long long>(t_pow), j)];
          const std::uint64_t twist = pow_mod(eta_o, (o - (m * t_pow) % o) % o, p);
          sum = (sum + chi_t * twist) % p;
        }
        const std::uint64_t count = sum * o_inv % p;
        if (count > degree) throw InconsistencyError("eigenvalue multiplicity exceeds the degree");
        if (count > 0)
          value += zeta_powers[m * step] * Cyclotomic(BigRational(static_cast<unsigned long>(count)));
      }
      row.push_back(std::move(value));
    }
    t.values.push_back(std::move(row));
  }

  const std::size_t second = r > 1 ? 1 : 0;
  const auto identity = t.identity_class();
  auto trivial = [](const std::vector<Cyclotomic>& row) {
    return std::all_of(row.begin(), row.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  };
  std::sort(t.values.begin(), t.values.end(), [&](const auto& a, const auto& b) {
    if (trivial(a) != trivial(b)) return trivial(a);
    int c = cmp(a[identity].rational(), b[identity].rational());
    if (c != 0) return c < 0;
    c = compare_lex(a[second], b[second]);
    if (c != 0) return c < 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      c = compare_lex(a[j], b[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  for (std::size_t i = 0; i < r; ++i) t.character_labels.push_back("chi" + std::to_string(i + 1));
  return t;
}

std::vector<std::string> class_labels(const ClassSet& cs) {
  std::map<std::uint64_t, unsigned> used;
  std::vector<std::string> out;
  for (const auto& c : cs.classes()) {
    unsigned n = used[c.element_order]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('a' + n % 26));
      n /= 26;
    } while (n-- > 0);
    out.push_back(std::to_string(c.element_order) + suffix);
  }
  return out;
}

CharacterTable compute_character_table(const FiniteGroup& g, const ClassSet& cs) {
  const ClassAlgebra ca = class_constants(g, cs);
  const std::uint64_t p = choose_prime(g.exponent(), g.order());
  const EigenData ed = common_eigenbasis(ca, p);
  CharacterTable t = lift_character_values(ed, cs, g.exponent());
  auto violations = verify(t);
  if (!violations.empty())
    throw InconsistencyError("computed table fails " + violations.front().relation);
  return t;
}

CharacterTable compute_character_table(const FiniteGroup& g) {
  return compute_character_table(g, conjugacy_classes(g));
}

}  // namespace ctrz
