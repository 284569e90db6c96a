#include "ctrz/tensor.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ctrz/error.hpp"

namespace ctrz {

CyclotomicMatrix inverse_matrix(const CyclotomicMatrix& m) {
  const std::size_t n = m.size();
  CyclotomicMatrix a = m;
  CyclotomicMatrix inv(n, std::vector<Cyclotomic>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Cyclotomic(BigRational(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    // prefer rational pivots; they avoid a field inversion
    for (std::size_t i = col; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      if (a[pivot][col].is_zero() || (a[i][col].is_rational() && !a[pivot][col].is_rational())) pivot = i;
    }
    if (a[pivot][col].is_zero()) throw ValidationError("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Cyclotomic scale = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      const Cyclotomic factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[i][j] -= factor * a[col][j];
        if (!inv[col][j].is_zero()) inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

MultiplicityVector multiplicities_direct(const CharacterTable& t, const ClassFunction& chi, unsigned k) {
  if (k == 0) throw InputError("tensor power must be at least 1");
  ClassFunction power;
  for (const auto& v : chi.values) power.values.push_back(v.pow(k));
  return decompose(t, power);
}

TransitionMatrix transition_matrix(const CharacterTable& t, const ClassFunction& chi) {
  const std::size_t r = t.class_count();
  if (chi.values.size() != r) throw InputError("class function length does not match the table");
  const CyclotomicMatrix& x = t.values;
  const CyclotomicMatrix x_inv = inverse_matrix(x);
  TransitionMatrix a;
  a.entries.assign(r, std::vector<BigInt>(r));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Cyclotomic> scaled(r);
    for (std::size_t c = 0; c < r; ++c) scaled[c] = x[i][c] * chi.values[c];
    for (std::size_t j = 0; j < r; ++j) {
      Cyclotomic sum;
      for (std::size_t c = 0; c < r; ++c)
        if (!scaled[c].is_zero()) sum += scaled[c] * x_inv[c][j];
      const std::string where = "transition matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (!sum.is_rational()) throw ValidationError(where + " is irrational");
      BigInt n = require_integer(sum.rational(), where);
      if (n < 0) throw ValidationError(where + " is negative");
      a.entries[i][j] = std::move(n);
    }
  }
  return a;
}

MultiplicityVector multiplicities_recurrence(const MultiplicityVector& first, const TransitionMatrix& a, unsigned k) {
  if (k == 0) throw InputError("tensor power must be at least 1");
  MultiplicityVector d = first;
  const std::size_t r = d.entries.size();
  for (unsigned step = 1; step < k; ++step) {
    MultiplicityVector next;
    next.entries.assign(r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) {
      if (d.entries[i] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) next.entries[j] += d.entries[i] * a.entries[i][j];
    }
    d = std::move(next);
  }
  return d;
}

MultiplicityVector multiplicities_recurrence(const CharacterTable& t, const ClassFunction& chi, unsigned k) {
  return multiplicities_recurrence(decompose(t, chi), transition_matrix(t, chi), k);
}

namespace {

BigRational q(long num, long den) {
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

BigInt power(unsigned long base, unsigned long exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

// multiplicity = c8·8^k + c4·4^k + c2·2^k + c1, letters a..l without k
const std::array<std::array<BigRational, 4>, 11>& deg8_forms() {
  static const std::array<std::array<BigRational, 4>, 11> forms{{
      {q(1, 1344), q(1, 32), q(7, 24), q(2, 7)},
      {q(1, 448), q(-1, 32), q(1, 8), q(-1, 7)},
      {q(1, 448), q(-1, 32), q(1, 8), q(-1, 7)},
      {q(1, 224), q(1, 16), q(0, 1), q(-2, 7)},
      {q(1, 192), q(-1, 32), q(1, 24), q(0, 1)},
      {q(1, 168), q(0, 1), q(-1, 6), q(2, 7)},
      {q(1, 192), q(-1, 32), q(1, 24), q(0, 1)},
      {q(1, 192), q(3, 32), q(7, 24), q(0, 1)},
      {q(1, 96), q(1, 16), q(-1, 6), q(0, 1)},
      {q(1, 64), q(-3, 32), q(1, 8), q(0, 1)},
      {q(1, 64), q(1, 32), q(-1, 8), q(0, 1)},
  }};
  return forms;
}

// multiplicity = 2^k (c7·7^k + c3·3^k + c1)
const std::array<std::array<BigRational, 3>, 11>& deg14_forms() {
  static const std::array<std::array<BigRational, 3>, 11> forms{{
      {q(1, 1344), q(7, 192), q(37, 96)},
      {q(1, 448), q(-1, 64), q(1, 32)},
      {q(1, 448), q(-1, 64), q(1, 32)},
      {q(1, 224), q(3, 32), q(3, 16)},
      {q(1, 192), q(1, 192), q(-5, 96)},
      {q(1, 168), q(1, 24), q(-1, 6)},
      {q(1, 192), q(17, 192), q(19, 96)},
      {q(1, 192), q(-7, 192), q(7, 96)},
      {q(1, 96), q(5, 96), q(-11, 48)},
      {q(1, 64), q(1, 64), q(-5, 32)},
      {q(1, 64), q(-7, 64), q(7, 32)},
  }};
  return forms;
}

BigRational evaluate_deg8(const std::array<BigRational, 4>& c, unsigned k) {
  return c[0] * power(8, k) + c[1] * power(4, k) + c[2] * power(2, k) + c[3];
}

BigRational evaluate_deg14(const std::array<BigRational, 3>& c, unsigned k) {
  return BigRational(power(2, k)) * (c[0] * power(7, k) + c[1] * power(3, k) + c[2]);
}

BigInt as_count(const BigRational& value, const std::string& what) {
  if (!is_integer(value) || value < 0)
    throw InconsistencyError(what + " evaluates to " + to_string(value) + ", not a nonnegative integer");
  return value.get_num();
}

}  // namespace

MultiplicityVector closed_form_multiplicities(ClosedFormGroup group, unsigned k) {
  if (k == 0) throw InputError("tensor power must be at least 1");
  static const char* letters[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "l"};
  MultiplicityVector out;
  for (std::size_t i = 0; i < 11; ++i) {
    const BigRational value = group == ClosedFormGroup::deg8 ? evaluate_deg8(deg8_forms()[i], k)
                                                             : evaluate_deg14(deg14_forms()[i], k);
    out.entries.push_back(as_count(value, std::string("closed form ") + letters[i] + " at k=" + std::to_string(k)));
  }
  return out;
}

BigInt closed_form_dimension(ClosedFormGroup group, unsigned k) {
  BigRational value;
  if (group == ClosedFormGroup::deg8) {
    value = q(1, 1344) * power(2, 6 * k) + q(1, 32) * power(2, 4 * k) + q(7, 24) * power(2, 2 * k) + q(2, 7);
  } else {
    value = BigRational(power(2, 2 * k)) * (q(1, 1344) * power(7, 2 * k) + q(7, 192) * power(3, 2 * k) + q(37, 96));
  }
  return as_count(value, "closed-form dimension at k=" + std::to_string(k));
}

std::string SemisimpleStructure::display() const {
  if (blocks.empty()) return "0";
  std::string out;
  for (const auto& [m, count] : blocks) {
    if (!out.empty()) out += " ⊕ ";
    if (count != 1) out += count.get_str();
    out += "M_" + m.get_str();
  }
  return out;
}

SemisimpleStructure semisimple_structure(const MultiplicityVector& d, const std::vector<BigInt>& degrees) {
  std::map<BigInt, BigInt, std::greater<>> counts;
  SemisimpleStructure s;
  for (const auto& m : d.entries) {
    if (m < 0) throw ValidationError("negative multiplicity " + m.get_str());
    if (m == 0) continue;
    counts[m] += 1;
    s.dimension += m * m;
  }
  for (const auto& [m, count] : counts) s.blocks.emplace_back(m, count);
  if (!degrees.empty()) {
    if (degrees.size() != d.entries.size()) throw InputError("degree list length does not match");
    BigInt total = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) total += d.entries[i] * degrees[i];
    s.degree_sum = total;
  }
  return s;
}

BigInt dimension_sum_of_squares(const MultiplicityVector& d) {
  BigInt total = 0;
  for (const auto& m : d.entries) total += m * m;
  return total;
}

BigInt dimension_character_formula(const CharacterTable& t, const ClassFunction& chi, unsigned k) {
  if (chi.values.size() != t.class_count()) throw InputError("class function length does not match the table");
  Cyclotomic sum;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const Cyclotomic power = chi.values[c].pow(k);
    sum += power * power.conj() * Cyclotomic(BigRational(static_cast<unsigned long>(t.classes[c].size)));
  }
  const BigRational value = sum.rational() / BigRational(static_cast<unsigned long>(t.group_order));
  return require_integer(value, "character-formula dimension");
}

std::vector<DimsRow> dims_report(const CharacterTable& t, const ClassFunction& chi, unsigned from, unsigned to,
                                 std::optional<ClosedFormGroup> group) {
  if (from == 0 || from > to) throw InputError("need 1 <= from <= to");
  const MultiplicityVector first = decompose(t, chi);
  const TransitionMatrix a = transition_matrix(t, chi);
  std::vector<DimsRow> rows;
  MultiplicityVector d = multiplicities_recurrence(first, a, from);
  for (unsigned k = from; k <= to; ++k) {
    if (k > from) d = multiplicities_recurrence(d, a, 2);
    DimsRow row;
    row.k = k;
    row.sum_of_squares = dimension_sum_of_squares(d);
    row.character_formula = dimension_character_formula(t, chi, k);
    if (group) row.closed_form = closed_form_dimension(*group, k);
    row.agree = row.sum_of_squares == row.character_formula &&
                (!row.closed_form || *row.closed_form == row.sum_of_squares);
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_closed_form_alignment(const CharacterTable& t, const ClassFunction& chi, ClosedFormGroup group) {
  const MultiplicityVector computed = decompose(t, chi);
  const MultiplicityVector published = closed_form_multiplicities(group, 1);
  if (computed != published)
    throw InconsistencyError("closed-form rows do not line up with the table rows: decomposition " +
                             to_string(computed) + " vs closed forms " + to_string(published));
}

std::optional<std::size_t> matching_diagonal(const std::vector<Cyclotomic>& chi,
                                             const std::vector<std::vector<Cyclotomic>>& candidates) {
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i] == chi) return i;
  return std::nullopt;
}

}  // namespace ctrz
