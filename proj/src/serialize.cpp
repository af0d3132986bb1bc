#include "kpferm/serialize.hpp"

#include "kpferm/error.hpp"

namespace kpferm {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_fail(std::string("expected a JSON object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) parse_fail(std::string(what) + ": integer out of range");
  return static_cast<int>(v);
}

Rational scalar_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_fail("scalar: expected a fraction string such as \"-3/4\"");
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + ": expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const char* what) {
  std::vector<int> out;
  for (const auto& e : array_of(j, what)) out.push_back(int_of(e, what));
  return out;
}

// Domain errors raised while building a parsed value are reported as parse errors.
template <class F>
auto building(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) parse_fail(std::string(what) + ": " + e.what());
    throw;
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

Json entry_list(const std::map<std::pair<int, int>, Rational>& m, const char* a, const char* b) {
  Json out = Json::array();
  for (const auto& [key, v] : m) out.push_back({{a, key.first}, {b, key.second}, {"value", format_rational(v)}});
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const AffineCoords& a) {
  return {{"entries", entry_list(a.entries(), "n", "m")}};
}

AffineCoords affine_from_json(const Json& j) {
  return building("AffineCoords", [&] {
    AffineCoords a;
    for (const auto& e : array_of(field(j, "entries"), "entries")) {
      const int n = int_of(field(e, "n"), "n");
      const int m = int_of(field(e, "m"), "m");
      a.set(n, m, a.at(n, m) + scalar_of(field(e, "value")));
    }
    return a;
  });
}

Json to_json(const QuadElement& x) {
  Json out;
  out["band"] = x.band;
  out["period"] = x.a.period() ? Json(*x.a.period()) : Json(nullptr);
  out["a"] = entry_list(x.a.generators(), "i", "j");
  out["b"] = entry_list(x.b, "i", "j");
  out["c"] = entry_list(x.c, "i", "j");
  out["central"] = format_rational(x.central);
  return out;
}

QuadElement quad_from_json(const Json& j) {
  return building("QuadElement", [&] {
    const int band = int_of(field(j, "band"), "band");
    std::optional<int> period;
    if (j.contains("period") && !j["period"].is_null()) period = int_of(j["period"], "period");
    QuadElement x(band, period);
    for (const auto& e : array_of(field(j, "a"), "a")) {
      x.add_a(int_of(field(e, "i"), "i"), int_of(field(e, "j"), "j"), scalar_of(field(e, "value")));
    }
    if (j.contains("b")) {
      for (const auto& e : array_of(j["b"], "b")) {
        x.add_b(int_of(field(e, "i"), "i"), int_of(field(e, "j"), "j"), scalar_of(field(e, "value")));
      }
    }
    if (j.contains("c")) {
      for (const auto& e : array_of(j["c"], "c")) {
        x.add_c(int_of(field(e, "i"), "i"), int_of(field(e, "j"), "j"), scalar_of(field(e, "value")));
      }
    }
    if (j.contains("central")) x.central = scalar_of(j["central"]);
    x.validate();
    return x;
  });
}

Json to_json(const NeutralQuadElement& x) {
  Json entries = Json::array();
  for (const auto& [key, v] : x.entries) {
    const auto [i, jj, hi, hj] = key;
    entries.push_back({{"i", i}, {"j", jj}, {"hat_i", hi}, {"hat_j", hj}, {"value", format_rational(v)}});
  }
  return {{"band", x.band}, {"entries", entries}, {"central", format_rational(x.central)}};
}

NeutralQuadElement neutral_from_json(const Json& j) {
  return building("NeutralQuadElement", [&] {
    NeutralQuadElement x;
    x.band = int_of(field(j, "band"), "band");
    if (x.band < 0) parse_fail("NeutralQuadElement: negative band");
    for (const auto& e : array_of(field(j, "entries"), "entries")) {
      const bool hi = e.contains("hat_i") && e["hat_i"].get<bool>();
      const bool hj = e.contains("hat_j") && e["hat_j"].get<bool>();
      x.add(int_of(field(e, "i"), "i"), int_of(field(e, "j"), "j"), hi, hj, scalar_of(field(e, "value")));
    }
    if (j.contains("central")) x.central = scalar_of(j["central"]);
    return x;
  });
}

Json to_json(const BandMatrix& m) {
  Json out;
  out["band"] = m.band();
  out["period"] = m.period() ? Json(*m.period()) : Json(nullptr);
  out["entries"] = entry_list(m.generators(), "i", "j");
  return out;
}

BandMatrix band_matrix_from_json(const Json& j) {
  return building("BandMatrix", [&] {
    std::optional<int> period;
    if (j.contains("period") && !j["period"].is_null()) period = int_of(j["period"], "period");
    BandMatrix m(int_of(field(j, "band"), "band"), period);
    for (const auto& e : array_of(field(j, "entries"), "entries")) {
      m.add(int_of(field(e, "i"), "i"), int_of(field(e, "j"), "j"), scalar_of(field(e, "value")));
    }
    return m;
  });
}

Json to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(format_rational(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

SquareMatrix square_matrix_from_json(const Json& j) {
  return building("matrix", [&] {
    const auto& rows = array_of(j, "matrix");
    const int n = static_cast<int>(rows.size());
    if (n == 0) parse_fail("matrix: must have at least one row");
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
      const auto& row = array_of(rows[static_cast<std::size_t>(i)], "matrix row");
      if (static_cast<int>(row.size()) != n) parse_fail("matrix: must be square");
      for (int k = 0; k < n; ++k) m(i, k) = scalar_of(row[static_cast<std::size_t>(k)]);
    }
    return m;
  });
}

Json to_json(const LoopElement& a) {
  Json terms = Json::array();
  for (const auto& [k, m] : a.terms()) terms.push_back({{"k", k}, {"matrix", to_json(m)}});
  return {{"size", a.size()}, {"terms", terms}};
}

LoopElement loop_from_json(const Json& j) {
  return building("LoopElement", [&] {
    LoopElement a(int_of(field(j, "size"), "size"));
    for (const auto& t : array_of(field(j, "terms"), "terms")) {
      const SquareMatrix m = square_matrix_from_json(field(t, "matrix"));
      if (m.size() != a.size()) parse_fail("LoopElement: matrix size does not match \"size\"");
      a.add(int_of(field(t, "k"), "k"), m);
    }
    return a;
  });
}

Json to_json(const EmbeddingData& e) {
  Json basis = Json::array();
  for (const auto& m : e.images) basis.push_back(to_json(m));
  return {{"size", e.size}, {"basis", basis}};
}

EmbeddingData embedding_from_json(const Json& j) {
  return building("EmbeddingData", [&] {
    EmbeddingData e;
    e.size = int_of(field(j, "size"), "size");
    for (const auto& m : array_of(field(j, "basis"), "basis")) e.images.push_back(square_matrix_from_json(m));
    e.validate();
    return e;
  });
}

Json to_json(const TSeries& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back({{"exponents", m}, {"value", format_rational(c)}});
  return {{"weight_cut", s.weight_cut()}, {"terms", terms}};
}

TSeries tseries_from_json(const Json& j) {
  return building("TSeries", [&] {
    TSeries s(int_of(field(j, "weight_cut"), "weight_cut"));
    for (const auto& t : array_of(field(j, "terms"), "terms")) {
      const Monomial m = int_list(field(t, "exponents"), "exponents");
      for (int e : m) {
        if (e < 0) parse_fail("TSeries: negative exponent");
      }
      if (monomial_weight(m) > s.weight_cut()) parse_fail("TSeries: monomial weight exceeds weight_cut");
      s.add(m, scalar_of(field(t, "value")));
    }
    return s;
  });
}

Json to_json(const NPointTable& t) {
  Json cells = Json::array();
  for (const auto& [j, v] : t.cells) cells.push_back({{"j", j}, {"value", format_rational(v)}});
  return {{"n", t.n}, {"weight_cut", t.weight_cut}, {"cells", cells}};
}

NPointTable npoint_from_json(const Json& j) {
  return building("NPointTable", [&] {
    NPointTable t;
    t.n = int_of(field(j, "n"), "n");
    t.weight_cut = int_of(field(j, "weight_cut"), "weight_cut");
    for (const auto& c : array_of(field(j, "cells"), "cells")) {
      const std::vector<int> idx = int_list(field(c, "j"), "j");
      if (static_cast<int>(idx.size()) != t.n) parse_fail("NPointTable: cell arity differs from n");
      int sum = 0;
      for (int v : idx) {
        if (v < 1) parse_fail("NPointTable: cell indices must be >= 1");
        sum += v;
      }
      if (sum > t.weight_cut) parse_fail("NPointTable: cell exceeds weight_cut");
      const Rational v = scalar_of(field(c, "value"));
      if (!is_zero(v)) t.cells[idx] += v;
    }
    return t;
  });
}

Json to_json(const PunctureData& p) {
  return {{"h", p.h}, {"E_plus", p.e_plus}, {"E_plus0", p.e_plus0}};
}

PunctureData puncture_from_json(const Json& j) {
  return building("PunctureData", [&] {
    PunctureData p;
    p.h = int_of(field(j, "h"), "h");
    p.e_plus = int_list(field(j, "E_plus"), "E_plus");
    p.e_plus0 = int_list(field(j, "E_plus0"), "E_plus0");
    p.validate();
    return p;
  });
}

Json labels_to_json(const std::set<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l);
  return {{"labels", out}};
}

std::string to_text(const TSeries& s) { return s.to_string(); }

std::string to_text(const NPointTable& t) {
  std::string out;
  for (const auto& [j, v] : t.cells) {
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? "," : "") + std::to_string(j[k]);
    out += ": " + format_rational(v) + "\n";
  }
  return out;
}

std::string to_text(const BandMatrix& m) {
  std::string out = "band " + std::to_string(m.band());
  if (m.period()) out += " period " + std::to_string(*m.period());
  out += "\n";
  for (const auto& [key, v] : m.generators()) {
    out += std::to_string(key.first) + "," + std::to_string(key.second) + ": " + format_rational(v) + "\n";
  }
  return out;
}

std::string labels_to_text(const std::set<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
  return out;
}

}  // namespace kpferm
