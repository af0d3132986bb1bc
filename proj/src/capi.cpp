#include "kpferm/kpferm.h"

#include "kpferm/error.hpp"
#include "kpferm/selftest.hpp"
#include "kpferm/serialize.hpp"

#include <cstring>
#include <new>
#include <optional>
#include <string>

struct kpf_coords {
  kpferm::AffineCoords value;
};
struct kpf_quad {
  kpferm::QuadElement value;
};
struct kpf_loop {
  kpferm::LoopElement value;
};
struct kpf_series {
  kpferm::TSeries value;
};
struct kpf_table {
  kpferm::NPointTable value;
};
struct kpf_puncture {
  kpferm::PunctureData value;
};

namespace {

using namespace kpferm;

thread_local std::string last_error;

kpf_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return KPF_INVALID;
    case ErrorKind::Parse: return KPF_PARSE;
    case ErrorKind::CapExceeded: return KPF_CAP;
    case ErrorKind::SelfCheckMismatch: return KPF_MISMATCH;
    case ErrorKind::Internal: return KPF_INTERNAL;
  }
  return KPF_INTERNAL;
}

kpf_status fail(kpf_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

template <class F>
kpf_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KPF_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KPF_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

void check_weight(int weight) {
  require(weight >= 0, "weight cut must be non-negative");
  if (weight > KPF_MAX_WEIGHT) {
    throw Error(ErrorKind::CapExceeded, "weight cut " + std::to_string(weight) + " exceeds the cap " +
                                            std::to_string(KPF_MAX_WEIGHT));
  }
}

template <class Handle, class Parse>
kpf_status parse_into(const char* json, Handle** out, Parse&& parse) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new Handle{parse(parse_json_text(json))};
    return KPF_OK;
  });
}

std::string series_text(const TSeries& s, kpf_format fmt) {
  return fmt == KPF_FORMAT_TEXT ? to_text(s) + "\n" : render(to_json(s));
}

}  // namespace

extern "C" {

const char* kpf_last_error(void) { return last_error.c_str(); }

const char* kpf_version(void) { return "0.1.0"; }

void kpf_string_free(char* s) { delete[] s; }

kpf_status kpf_coords_parse(const char* json, kpf_coords** out) {
  return parse_into(json, out, [](const Json& j) { return affine_from_json(j); });
}
void kpf_coords_free(kpf_coords* h) { delete h; }

kpf_status kpf_quad_parse(const char* json, kpf_quad** out) {
  return parse_into(json, out, [](const Json& j) { return quad_from_json(j); });
}
void kpf_quad_free(kpf_quad* h) { delete h; }

kpf_status kpf_loop_parse(const char* json, kpf_loop** out) {
  return parse_into(json, out, [](const Json& j) { return loop_from_json(j); });
}
void kpf_loop_free(kpf_loop* h) { delete h; }

kpf_status kpf_series_parse(const char* json, kpf_series** out) {
  return parse_into(json, out, [](const Json& j) { return tseries_from_json(j); });
}
void kpf_series_free(kpf_series* h) { delete h; }

kpf_status kpf_series_format(const kpf_series* h, kpf_format fmt, char** out) {
  return guarded([&] {
    require(h != nullptr && out != nullptr, "null argument");
    *out = dup_string(series_text(h->value, fmt));
    return KPF_OK;
  });
}

void kpf_table_free(kpf_table* h) { delete h; }

kpf_status kpf_table_format(const kpf_table* h, kpf_format fmt, char** out) {
  return guarded([&] {
    require(h != nullptr && out != nullptr, "null argument");
    *out = dup_string(fmt == KPF_FORMAT_TEXT ? to_text(h->value) : render(to_json(h->value)));
    return KPF_OK;
  });
}

kpf_status kpf_puncture_parse(const char* json, kpf_puncture** out) {
  return parse_into(json, out, [](const Json& j) { return puncture_from_json(j); });
}
void kpf_puncture_free(kpf_puncture* h) { delete h; }

kpf_status kpf_tau(const kpf_coords* a, int weight, unsigned flags, kpf_series** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    check_weight(weight);
    TSeries tau = tau_series(a->value, weight);
    if ((flags & KPF_FAST) == 0) {
      const TSeries schur = tau_series_schur(a->value, weight);
      if (!(schur == tau)) {
        return fail(KPF_MISMATCH, "tau self-check failed: direct path gives " + tau.to_string() +
                                      ", Schur path gives " + schur.to_string());
      }
    }
    *out = new kpf_series{std::move(tau)};
    return KPF_OK;
  });
}

kpf_status kpf_npoint(const kpf_coords* a, int n, int weight, unsigned flags, kpf_table** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    check_weight(weight);
    NPointTable table = npoint_formula(a->value, n, weight);
    if ((flags & KPF_FAST) == 0) {
      const NPointTable oracle = npoint_oracle(a->value, n, weight);
      for (const auto& cell : npoint_cells(n, weight)) {
        if (table.at(cell) != oracle.at(cell)) {
          std::string c;
          for (int j : cell) c += (c.empty() ? "" : ",") + std::to_string(j);
          return fail(KPF_MISMATCH, "n-point self-check failed at cell " + c + ": formula " +
                                        format_rational(table.at(cell)) + ", oracle " +
                                        format_rational(oracle.at(cell)));
        }
      }
    }
    *out = new kpf_table{std::move(table)};
    return KPF_OK;
  });
}

kpf_status kpf_classify(const kpf_quad* x, int l, kpf_format fmt, char** out) {
  return guarded([&] {
    require(x != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto labels = classify(x->value, l);
    *out = dup_string(fmt == KPF_FORMAT_TEXT ? labels_to_text(labels) + "\n" : render(labels_to_json(labels)));
    return KPF_OK;
  });
}

kpf_status kpf_cocycle(const kpf_loop* a, const kpf_loop* b, kpf_cocycle_mode mode, kpf_format fmt,
                       char** out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    require(mode == KPF_COCYCLE_COUNT || mode == KPF_COCYCLE_RESIDUE || mode == KPF_COCYCLE_BOTH,
            "unknown cocycle mode");
    require(a->value.size() == b->value.size(), "cocycle: loop elements must have the same size");
    Json j = Json::object();
    std::string text;
    std::optional<Rational> count;
    std::optional<Rational> residue;
    if (mode != KPF_COCYCLE_RESIDUE) {
      count = cocycle_pairs(loop_embed(a->value), loop_embed(b->value));
      j["count"] = format_rational(*count);
      text += "count: " + format_rational(*count) + "\n";
    }
    if (mode != KPF_COCYCLE_COUNT) {
      residue = residue_cocycle(a->value, b->value);
      j["residue"] = format_rational(*residue);
      text += "residue: " + format_rational(*residue) + "\n";
    }
    *out = dup_string(fmt == KPF_FORMAT_TEXT ? text : render(j));
    if (count && residue && *count != *residue) {
      return fail(KPF_MISMATCH, "cocycle self-check failed: pair count " + format_rational(*count) +
                                    ", residue " + format_rational(*residue));
    }
    return KPF_OK;
  });
}

kpf_status kpf_embed(const kpf_loop* a, kpf_format fmt, char** out) {
  return guarded([&] {
    require(a != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const BandMatrix m = loop_embed(a->value);
    *out = dup_string(fmt == KPF_FORMAT_TEXT ? to_text(m) + "\n" : render(to_json(m)));
    return KPF_OK;
  });
}

kpf_status kpf_check_puncture(const kpf_series* tau, const kpf_puncture* p, kpf_series** out) {
  return guarded([&] {
    require(tau != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    check_weight(tau->value.weight_cut());
    *out = new kpf_series{check_puncture(tau->value, p->value)};
    return KPF_OK;
  });
}

kpf_status kpf_selftest(int energy, int mutate_boson_sign, uint64_t seed, char** report, int* passed) {
  return guarded([&] {
    require(report != nullptr && passed != nullptr, "null argument");
    *report = nullptr;
    require(energy >= 1, "selftest energy must be at least 1");
    if (energy > KPF_MAX_ENERGY) {
      throw Error(ErrorKind::CapExceeded, "energy cut " + std::to_string(energy) + " exceeds the cap " +
                                              std::to_string(KPF_MAX_ENERGY));
    }
    SelftestOptions opts;
    opts.energy = energy;
    opts.mutate_boson_sign = mutate_boson_sign != 0;
    opts.seed = seed;
    const SelftestReport rep = run_selftest(opts);
    *passed = rep.passed() ? 1 : 0;
    *report = dup_string(rep.to_text());
    return KPF_OK;
  });
}

}  // extern "C"
