#include "ctrz/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "ctrz/error.hpp"

namespace ctrz {

namespace {

constexpr std::size_t kMaxColumnMatchings = 1'000'000;

// Minimum-cost perfect assignment (Hungarian method, O(n^3)).
// Returns assignment[row] = column.
std::vector<std::size_t> assign(const std::vector<std::vector<long long>>& cost) {
  const std::size_t n = cost.size();
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<long long> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      long long delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> out(n);
  for (std::size_t j = 1; j <= n; ++j) out[match[j] - 1] = j - 1;
  return out;
}

std::string label_of(const CharacterTable& t, std::size_t row) {
  return row < t.character_labels.size() ? t.character_labels[row] : std::to_string(row + 1);
}

}  // namespace

TableMatching match_columns(const CharacterTable& computed, const CharacterTable& external,
                            const MatchConstraints& constraints) {
  const std::size_t r = computed.class_count();
  if (external.class_count() != r || external.character_count() != r || computed.character_count() != r)
    throw InputError("tables to be matched must have the same number of classes and characters");

  auto keys_for = [&](const CharacterTable& t, const std::vector<std::string>& extra) {
    std::vector<std::string> keys;
    for (std::size_t c = 0; c < r; ++c)
      keys.push_back(std::to_string(t.classes[c].size) + "|" + (c < extra.size() ? extra[c] : ""));
    return keys;
  };
  auto computed_keys = keys_for(computed, constraints.computed_keys);
  auto external_keys = keys_for(external, constraints.external_keys);

  TableMatching result;
  {
    auto a = computed_keys;
    auto b = external_keys;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      result.notes.push_back("column keys differ between the tables; matching on the whole column set");
      computed_keys.assign(r, "");
      external_keys.assign(r, "");
    }
  }

  // cell equality: same[e_row][e_col][c_row][c_col]
  const unsigned conductor = std::lcm(computed.conductor, external.conductor);
  std::vector<std::vector<Cyclotomic>> ext(r), cmp_values(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) {
      ext[i].push_back(external.values[i][c].lift(conductor));
      cmp_values[i].push_back(computed.values[i][c].lift(conductor));
    }
  std::vector<char> same(r * r * r * r);
  for (std::size_t ei = 0; ei < r; ++ei)
    for (std::size_t ec = 0; ec < r; ++ec)
      for (std::size_t ci = 0; ci < r; ++ci)
        for (std::size_t cc = 0; cc < r; ++cc)
          same[((ei * r + ec) * r + ci) * r + cc] = ext[ei][ec] == cmp_values[ci][cc];
  auto equal = [&](std::size_t ei, std::size_t ec, std::size_t ci, std::size_t cc) {
    return same[((ei * r + ec) * r + ci) * r + cc] != 0;
  };

  // groups of interchangeable columns, in external order
  std::map<std::string, std::vector<std::size_t>> ext_groups, cmp_groups;
  for (std::size_t c = 0; c < r; ++c) {
    ext_groups[external_keys[c]].push_back(c);
    cmp_groups[computed_keys[c]].push_back(c);
  }
  struct Group {
    std::vector<std::size_t> external_columns;
    std::vector<std::size_t> computed_columns;  // permuted during enumeration
  };
  std::vector<Group> groups;
  double combinations = 1;
  for (auto& [key, cols] : ext_groups) {
    groups.push_back({cols, cmp_groups[key]});
    for (std::size_t k = 2; k <= cols.size(); ++k) combinations *= static_cast<double>(k);
  }
  const bool exhaustive = combinations <= static_cast<double>(kMaxColumnMatchings);
  if (!exhaustive) result.notes.push_back("too many column matchings to enumerate; columns paired in class order");

  const long long tie_weight = static_cast<long long>(r) + 1;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::size_t best_count = 0;
  std::vector<std::size_t> columns(r);

  auto evaluate = [&] {
    for (const auto& g : groups)
      for (std::size_t k = 0; k < g.external_columns.size(); ++k) columns[g.external_columns[k]] = g.computed_columns[k];
    std::vector<std::vector<long long>> cost(r, std::vector<long long>(r, 0));
    for (std::size_t ei = 0; ei < r; ++ei)
      for (std::size_t ci = 0; ci < r; ++ci) {
        long long misses = 0;
        for (std::size_t ec = 0; ec < r; ++ec)
          if (!equal(ei, ec, ci, columns[ec])) ++misses;
        cost[ei][ci] = misses * tie_weight * tie_weight + (ei == ci ? 0 : 1);
      }
    const auto rows = assign(cost);
    std::size_t misses = 0;
    for (std::size_t ei = 0; ei < r; ++ei)
      for (std::size_t ec = 0; ec < r; ++ec)
        if (!equal(ei, ec, rows[ei], columns[ec])) ++misses;
    if (misses < best) {
      best = misses;
      best_count = 1;
      result.rows = rows;
      result.columns = columns;
    } else if (misses == best) {
      ++best_count;
    }
  };

  // odometer over the per-group permutations
  for (auto& g : groups) std::sort(g.computed_columns.begin(), g.computed_columns.end());
  if (exhaustive) {
    while (true) {
      evaluate();
      std::size_t k = groups.size();
      while (k > 0) {
        auto& cols = groups[k - 1].computed_columns;
        if (std::next_permutation(cols.begin(), cols.end())) break;
        --k;  // next_permutation wrapped this group back to sorted order
      }
      if (k == 0) break;
    }
  } else {
    evaluate();
  }

  result.mismatched_cells = best;
  result.optimal_column_matchings = best_count;
  if (best_count > 1)
    result.notes.push_back(std::to_string(best_count) +
                           " column matchings are equally good; "
                           "the first in class order is reported");

  for (std::size_t e1 = 0; e1 < r; ++e1)
    for (std::size_t e2 = e1 + 1; e2 < r; ++e2) {
      std::size_t before = 0, after = 0;
      for (std::size_t ec = 0; ec < r; ++ec) {
        const std::size_t cc = result.columns[ec];
        before += !equal(e1, ec, result.rows[e1], cc) + !equal(e2, ec, result.rows[e2], cc);
        after += !equal(e1, ec, result.rows[e2], cc) + !equal(e2, ec, result.rows[e1], cc);
      }
      if (before == after)
        result.notes.push_back("rows " + label_of(external, e1) + " and " + label_of(external, e2) +
                               " match equally well either way; assignment is conventional");
    }

  for (std::size_t ei = 0; ei < r; ++ei)
    for (std::size_t ec = 0; ec < r; ++ec) {
      const std::size_t ci = result.rows[ei];
      const std::size_t cc = result.columns[ec];
      if (equal(ei, ec, ci, cc)) continue;
      Finding f;
      f.kind = "cell-mismatch";
      f.row = ei;
      f.column = ec;
      f.external = display(external.values[ei][ec]);
      f.computed = display(computed.values[ci][cc]);
      f.relation = "equality with " + label_of(computed, ci) + " at class " + computed.classes[cc].label;
      result.errata.findings.push_back(std::move(f));
    }
  return result;
}

CharacterTable align_rows(const CharacterTable& computed, const CharacterTable& external,
                          const TableMatching& matching) {
  CharacterTable out = computed;
  out.values.clear();
  out.character_labels.clear();
  for (std::size_t ei = 0; ei < matching.rows.size(); ++ei) {
    out.values.push_back(computed.values[matching.rows[ei]]);
    out.character_labels.push_back(label_of(external, ei));
  }
  return out;
}

std::vector<Finding> reconcile_classes(const FiniteGroup& g, const ClassSet& cs,
                                       const std::vector<PrintedClass>& printed) {
  std::vector<Finding> out;
  std::map<std::size_t, std::string> claimed;
  for (std::size_t k = 0; k < printed.size(); ++k) {
    const auto& pc = printed[k];
    Finding f;
    f.row = k;
    Permutation rep;
    try {
      rep = parse_cycles(pc.representative, g.degree());
    } catch (const InputError& err) {
      f.kind = "representative-invalid";
      f.external = pc.representative;
      f.computed = err.what();
      f.relation = "cycle notation";
      out.push_back(f);
      continue;
    }
    auto index = g.index_of(rep);
    if (!index) {
      f.kind = "representative-invalid";
      f.external = pc.representative;
      f.computed = "not a group element";
      f.relation = "membership";
      out.push_back(f);
      continue;
    }
    const std::size_t c = cs.class_of(*index);
    const std::uint64_t order = rep.order();
    if (auto it = claimed.find(c); it != claimed.end()) {
      f.kind = "duplicate-class";
      f.external = pc.label;
      f.computed = it->second;
      f.relation = "distinct classes";
      out.push_back(f);
    }
    claimed.emplace(c, pc.label);
    if (pc.size != cs[c].size) {
      const bool divides = pc.size != 0 && g.order() % pc.size == 0 && (g.order() / pc.size) % order == 0;
      f.kind = "class-size-mismatch";
      f.external = pc.label + " size " + std::to_string(pc.size) + ", representative of order " +
                   std::to_string(order);
      f.computed = "class of size " + std::to_string(cs[c].size);
      f.relation = divides ? "size of the representative's class" : "element order divides centralizer order";
      out.push_back(f);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> conjugate_row_pairs(const CharacterTable& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < t.character_count(); ++i)
    for (std::size_t j = i + 1; j < t.character_count(); ++j) {
      bool conj = true;
      for (std::size_t c = 0; c < t.class_count() && conj; ++c) conj = t.values[i][c].conj() == t.values[j][c];
      if (conj) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> conjugate_column_pairs(const CharacterTable& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < t.class_count(); ++a)
    for (std::size_t b = a + 1; b < t.class_count(); ++b) {
      bool conj = true;
      for (std::size_t i = 0; i < t.character_count() && conj; ++i) conj = t.values[i][a].conj() == t.values[i][b];
      if (conj) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace ctrz
