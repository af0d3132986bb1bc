#include "kpferm/npoint.hpp"

#include "kpferm/error.hpp"
#include "kpferm/tau.hpp"

#include <algorithm>
#include <numeric>

namespace kpferm {

bool CellOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int sa = std::accumulate(a.begin(), a.end(), 0);
  const int sb = std::accumulate(b.begin(), b.end(), 0);
  if (sa != sb) return sa < sb;
  return a < b;
}

Rational NPointTable::at(const std::vector<int>& j) const {
  auto it = cells.find(j);
  return it == cells.end() ? Rational(0) : it->second;
}

namespace {

void check_n(int n, int weight_cut) {
  if (n < 2) throw_invalid("n-point: n must be at least 2");
  if (n > kMaxNPoint) {
    throw Error(ErrorKind::CapExceeded, "unsupported n: " + std::to_string(n) + " (at most " +
                                            std::to_string(kMaxNPoint) + ")");
  }
  if (weight_cut < 0) throw_invalid("n-point: weight cut must be non-negative");
}

void cells_rec(int n, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  const int left = n - static_cast<int>(cur.size()) - 1;
  for (int j = 1; j <= budget - left; ++j) {
    cur.push_back(j);
    cells_rec(n, budget - j, cur, out);
    cur.pop_back();
  }
}

// Depth-first walk around one cycle. x is the exponent of xi_{cycle[k]} in
// factor k; the factor's second exponent fixes x for the next factor.
struct CycleWalk {
  const AffineCoords& a;
  const std::vector<int>& cycle;  // 0-based positions
  const std::vector<int>& target;  // exponent -j-1 per position
  int x0 = 0;
  Rational total = 0;

  void step(std::size_t k, int x, const Rational& acc) {
    const std::size_t n = cycle.size();
    if (k == n) {
      if (x == x0) total += acc;
      return;
    }
    const int from = cycle[k];
    const int to = cycle[(k + 1) % n];
    const int t_next = target[static_cast<std::size_t>(to)];
    // A-part: x = -p-1, second exponent -q-1.
    if (x <= -1) {
      const int p = -x - 1;
      for (const auto& [key, v] : a.entries()) {
        if (key.first != p) continue;
        step(k + 1, t_next + key.second + 1, acc * v);
      }
    }
    // Polar part: second exponent -1-x.
    if (from < to && x <= -1) step(k + 1, t_next + 1 + x, acc);
    if (from > to && x >= 0) step(k + 1, t_next + 1 + x, Rational(-acc));
  }
};

}  // namespace

std::vector<std::vector<int>> npoint_cells(int n, int weight_cut) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  cells_rec(n, weight_cut, cur, out);
  std::sort(out.begin(), out.end(), CellOrder{});
  return out;
}

Rational kernel_hat_cell(const AffineCoords& a, int i, int j, int p, int q) {
  Rational v = 0;
  if (p <= -1 && q <= -1) v += a.at(-p - 1, -q - 1);
  if (i < j && p <= -1 && q == -p - 1) v += 1;
  if (i > j && p >= 0 && q == -p - 1) v -= 1;
  return v;
}

NPointTable npoint_formula(const AffineCoords& a, int n, int weight_cut) {
  check_n(n, weight_cut);
  NPointTable table{n, weight_cut, {}};
  if (a.is_zero()) return table;
  const int pmax = a.max_n();
  const int qmax = a.max_m();
  // Cycles through position 0.
  std::vector<std::vector<int>> cycles;
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<int> c{0};
    c.insert(c.end(), rest.begin(), rest.end());
    cycles.push_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));

  const Rational sign = n % 2 == 0 ? Rational(-1) : Rational(1);
  for (const auto& j : npoint_cells(n, weight_cut)) {
    std::vector<int> target;
    for (int ji : j) target.push_back(-ji - 1);
    // Every cycle contains an A-part factor; after it the running exponent is
    // at most qmax, and each polar step lowers it by some j_i.
    const int lo = -(n * (weight_cut + 2) + pmax + 2);
    const int hi = qmax + 2;
    Rational value = 0;
    for (const auto& c : cycles) {
      CycleWalk walk{a, c, target};
      for (int x0 = lo; x0 <= hi; ++x0) {
        walk.x0 = x0;
        walk.step(0, x0, Rational(1));
      }
      value += walk.total;
    }
    value *= sign;
    if (!is_zero(value)) table.cells.emplace(j, value);
  }
  return table;
}

NPointTable npoint_from_series(const TSeries& f, int n) {
  check_n(n, f.weight_cut());
  NPointTable table{n, f.weight_cut(), {}};
  for (const auto& j : npoint_cells(n, f.weight_cut())) {
    Monomial m;
    for (int ji : j) {
      if (static_cast<int>(m.size()) < ji) m.resize(static_cast<std::size_t>(ji), 0);
      m[static_cast<std::size_t>(ji - 1)] += 1;
    }
    Rational value = f.coefficient(m);
    for (int e : m)
      for (int k = 2; k <= e; ++k) value *= k;
    if (!is_zero(value)) table.cells.emplace(j, value);
  }
  return table;
}

NPointTable npoint_oracle(const AffineCoords& a, int n, int weight_cut) {
  check_n(n, weight_cut);
  return npoint_from_series(free_energy(tau_series(a, weight_cut)), n);
}

}  // namespace kpferm
