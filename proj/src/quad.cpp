#include "kpferm/quad.hpp"

#include "kpferm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace kpferm {

namespace {

void add_antisymmetric(std::map<QuadElement::Key, Rational>& block, int band, int j, int k,
                       const Rational& v, const char* name) {
  if (std::abs(j + k) > band) {
    throw_invalid(std::string("QuadElement: ") + name + "-block entry (" + std::to_string(j) + "," +
                  std::to_string(k) + ") violates |j + k| <= " + std::to_string(band));
  }
  if (j == k || is_zero(v)) return;
  Rational w = v;
  if (j > k) {
    std::swap(j, k);
    w = -w;
  }
  auto [it, inserted] = block.try_emplace({j, k}, w);
  if (!inserted) {
    it->second += w;
    if (is_zero(it->second)) block.erase(it);
  }
}

// Range of integer shifts m with lo <= base + m p <= hi.
std::pair<int, int> shift_range(int base, int p, int lo, int hi) {
  const int m_min = -floor_div(base - lo, p);
  const int m_max = floor_div(hi - base, p);
  return {m_min, m_max};
}

}  // namespace

void QuadElement::add_b(int j, int k, const Rational& v) { add_antisymmetric(b, band, j, k, v, "b"); }
void QuadElement::add_c(int j, int k, const Rational& v) { add_antisymmetric(c, band, j, k, v, "c"); }

void QuadElement::validate() const {
  if (band < 0) throw_invalid("QuadElement: negative band");
  if (a.band() > band) throw_invalid("QuadElement: a-block band exceeds the declared band");
  if (extended() && periodic()) {
    throw_invalid("QuadElement: b/c blocks are only supported for finite elements");
  }
  for (const auto* block : {&b, &c}) {
    for (const auto& [key, v] : *block) {
      if (key.first >= key.second || std::abs(key.first + key.second) > band) {
        throw_invalid("QuadElement: malformed b/c block entry");
      }
    }
  }
}

std::size_t quad_support_bound(const QuadElement& x, const BasisState& s) {
  std::size_t bound = 1 + x.b.size() + x.c.size();
  if (!x.periodic()) return bound + x.a.generators().size();
  const int p = *x.a.period();
  const auto [lo, tail] = occupied_window(s);
  for (const auto& [key, v] : x.a.generators()) {
    const auto [i0, j0] = key;
    std::pair<int, int> r;
    if (i0 == j0) {
      // Occupation of slot -i-1 must differ from the vacuum's.
      r = shift_range(i0, p, -std::max(tail, 0), -std::min(lo, 0) - 1);
    } else {
      const int m_min = shift_range(i0, p, -tail, i0 + p).first;
      const int m_max = shift_range(j0, p, j0 - p, -lo - 1).second;
      r = {m_min, m_max};
    }
    if (r.second >= r.first) bound += static_cast<std::size_t>(r.second - r.first + 1);
  }
  return bound;
}

namespace {

void apply_a_entry(int i, int j, const Rational& coeff, const BasisState& s, const Rational& c,
                   FockVector& out) {
  if (i == j) {
    const int occ = slot_occupied(s, -i - 1) ? 1 : 0;
    const int eigen = occ - (i <= -1 ? 1 : 0);
    if (eigen != 0) out.add(s, Rational(eigen) * coeff * c);
    return;
  }
  if (auto r = move_slot(s, -j - 1, -i - 1)) {
    out.add(r->state, Rational(r->sign) * coeff * c);
  }
}

}  // namespace

FockVector apply_quad(const QuadElement& x, const FockVector& v) {
  x.validate();
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    FockVector part;
    if (!x.periodic()) {
      for (const auto& [key, coeff] : x.a.generators()) apply_a_entry(key.first, key.second, coeff, s, c, part);
    } else {
      const int p = *x.a.period();
      const auto [lo, tail] = occupied_window(s);
      for (const auto& [key, coeff] : x.a.generators()) {
        const auto [i0, j0] = key;
        int m_min = 0;
        int m_max = -1;
        if (i0 == j0) {
          std::tie(m_min, m_max) = shift_range(i0, p, -std::max(tail, 0), -std::min(lo, 0) - 1);
        } else {
          // Target slot -i-1 below the tail, source slot -j-1 at or above lo.
          m_min = shift_range(i0, p, -tail, i0 + p).first;
          m_max = shift_range(j0, p, j0 - p, -lo - 1).second;
        }
        for (int m = m_min; m <= m_max; ++m) apply_a_entry(i0 + m * p, j0 + m * p, coeff, s, c, part);
      }
    }
    for (const auto& [key, coeff] : x.b) {
      if (auto r1 = fill_slot(s, -key.second - 1)) {
        if (auto r2 = fill_slot(r1->state, -key.first - 1)) {
          part.add(r2->state, Rational(r1->sign * r2->sign) * coeff * c);
        }
      }
    }
    for (const auto& [key, coeff] : x.c) {
      if (auto r1 = empty_slot(s, -key.second - 1)) {
        if (auto r2 = empty_slot(r1->state, -key.first - 1)) {
          part.add(r2->state, Rational(r1->sign * r2->sign) * coeff * c);
        }
      }
    }
    if (!is_zero(x.central)) part.add(s, x.central * c);
    if (part.size() > quad_support_bound(x, s)) {
      throw_internal("apply_quad: produced more terms than the finiteness bound allows");
    }
    out += part;
  }
  return out;
}

QuadElement quad_from_matrix(const CentralMatrix& m) {
  QuadElement q;
  q.band = m.matrix.band();
  q.a = m.matrix.shifted(-1);
  q.central = m.central;
  return q;
}

CentralMatrix matrix_of(const QuadElement& x) {
  if (x.extended()) throw_invalid("matrix_of: element has b/c blocks outside A-infinity");
  return {x.a.shifted(1), x.central};
}

QuadElement quad_bracket(const QuadElement& x, const QuadElement& y) {
  return quad_from_matrix(ainf_bracket(matrix_of(x), matrix_of(y)));
}

}  // namespace kpferm
