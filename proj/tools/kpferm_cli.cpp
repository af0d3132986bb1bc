// Command-line front end. Uses only the C interface in kpferm.h.

#include "kpferm/kpferm.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCap = 3, kMismatch = 4 };

int exit_code(kpf_status s) {
  switch (s) {
    case KPF_OK: return kOk;
    case KPF_PARSE: return kParse;
    case KPF_CAP: return kCap;
    case KPF_MISMATCH: return kMismatch;
    default: return kUsage;
  }
}

struct InputError {
  std::string what;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int report(kpf_status s) {
  if (s != KPF_OK) std::cerr << "error: " << kpf_last_error() << "\n";
  return exit_code(s);
}

// Prints and frees a library string.
void emit(char* s) {
  if (s == nullptr) return;
  std::fputs(s, stdout);
  kpf_string_free(s);
}

template <class T>
using Owned = std::unique_ptr<T, void (*)(T*)>;

template <class T>
kpf_status load(const std::string& path, kpf_status (*parse)(const char*, T**), void (*release)(T*), Owned<T>& out) {
  T* raw = nullptr;
  const kpf_status s = parse(read_input(path).c_str(), &raw);
  out = Owned<T>(raw, release);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-fermion tau functions, n-point functions and A-infinity subalgebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  const auto fmt = [&] { return format == "text" ? KPF_FORMAT_TEXT : KPF_FORMAT_JSON; };

  std::string file_a;
  std::string file_b;
  int weight = 0;
  int n = 2;
  int l = 1;
  int energy = 4;
  bool fast = false;
  bool mutate = false;
  std::uint64_t seed = 20240611;
  std::string mode = "both";

  auto* tau = app.add_subcommand("tau", "Tau function of affine coordinates");
  tau->add_option("coords", file_a, "AffineCoords JSON file ('-' for stdin)")->required();
  tau->add_option("--weight", weight, "Total weight cut")->required();
  tau->add_flag("--fast", fast, "Skip the Schur-path cross-check");

  auto* np = app.add_subcommand("npoint", "n-point functions of affine coordinates");
  np->add_option("coords", file_a, "AffineCoords JSON file ('-' for stdin)")->required();
  np->add_option("-n", n, "Number of points")->required();
  np->add_option("--weight", weight, "Cut on j1 + ... + jn")->required();
  np->add_flag("--fast", fast, "Skip the log-tau cross-check");

  auto* cl = app.add_subcommand("classify", "Subalgebra labels of a quadratic element");
  cl->add_option("element", file_a, "QuadElement JSON file ('-' for stdin)")->required();
  cl->add_option("-l", l, "Rank parameter of the affine families");

  auto* co = app.add_subcommand("cocycle", "Cocycle of two loop elements");
  co->add_option("a", file_a, "LoopElement JSON file")->required();
  co->add_option("b", file_b, "LoopElement JSON file")->required();
  co->add_option("--mode", mode, "Pair count, residue, or both")->check(CLI::IsMember({"count", "residue", "both"}));

  auto* em = app.add_subcommand("embed", "Periodic band matrix of a loop element");
  em->add_option("loop", file_a, "LoopElement JSON file ('-' for stdin)")->required();

  auto* pu = app.add_subcommand("puncture", "Residual of the puncture constraint");
  pu->add_option("tau", file_a, "TSeries JSON file")->required();
  pu->add_option("data", file_b, "PunctureData JSON file")->required();

  auto* st = app.add_subcommand("selftest", "Invariant suite at reduced sizes");
  st->add_option("--energy", energy, "Energy cut of the Fock-space windows");
  st->add_option("--seed", seed, "Random seed");
  st->add_flag("--mutate-boson-sign", mutate, "Flip the sign of odd boson modes (mutation test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*tau || *np) {
      Owned<kpf_coords> a(nullptr, kpf_coords_free);
      if (kpf_status s = load(file_a, kpf_coords_parse, kpf_coords_free, a); s != KPF_OK) return report(s);
      const unsigned flags = fast ? KPF_FAST : 0u;
      if (*tau) {
        kpf_series* out = nullptr;
        if (kpf_status s = kpf_tau(a.get(), weight, flags, &out); s != KPF_OK) return report(s);
        Owned<kpf_series> res(out, kpf_series_free);
        char* text = nullptr;
        if (kpf_status s = kpf_series_format(res.get(), fmt(), &text); s != KPF_OK) return report(s);
        emit(text);
      } else {
        kpf_table* out = nullptr;
        if (kpf_status s = kpf_npoint(a.get(), n, weight, flags, &out); s != KPF_OK) return report(s);
        Owned<kpf_table> res(out, kpf_table_free);
        char* text = nullptr;
        if (kpf_status s = kpf_table_format(res.get(), fmt(), &text); s != KPF_OK) return report(s);
        emit(text);
      }
      return kOk;
    }
    if (*cl) {
      Owned<kpf_quad> x(nullptr, kpf_quad_free);
      if (kpf_status s = load(file_a, kpf_quad_parse, kpf_quad_free, x); s != KPF_OK) return report(s);
      char* text = nullptr;
      const kpf_status s = kpf_classify(x.get(), l, fmt(), &text);
      emit(text);
      return report(s);
    }
    if (*co || *em) {
      Owned<kpf_loop> a(nullptr, kpf_loop_free);
      if (kpf_status s = load(file_a, kpf_loop_parse, kpf_loop_free, a); s != KPF_OK) return report(s);
      char* text = nullptr;
      kpf_status s = KPF_OK;
      if (*em) {
        s = kpf_embed(a.get(), fmt(), &text);
      } else {
        Owned<kpf_loop> b(nullptr, kpf_loop_free);
        if (kpf_status sb = load(file_b, kpf_loop_parse, kpf_loop_free, b); sb != KPF_OK) return report(sb);
        const kpf_cocycle_mode m = mode == "count" ? KPF_COCYCLE_COUNT
                                   : mode == "residue" ? KPF_COCYCLE_RESIDUE
                                                       : KPF_COCYCLE_BOTH;
        s = kpf_cocycle(a.get(), b.get(), m, fmt(), &text);
      }
      emit(text);
      return report(s);
    }
    if (*pu) {
      Owned<kpf_series> t(nullptr, kpf_series_free);
      Owned<kpf_puncture> p(nullptr, kpf_puncture_free);
      if (kpf_status s = load(file_a, kpf_series_parse, kpf_series_free, t); s != KPF_OK) return report(s);
      if (kpf_status s = load(file_b, kpf_puncture_parse, kpf_puncture_free, p); s != KPF_OK) return report(s);
      kpf_series* out = nullptr;
      if (kpf_status s = kpf_check_puncture(t.get(), p.get(), &out); s != KPF_OK) return report(s);
      Owned<kpf_series> res(out, kpf_series_free);
      char* text = nullptr;
      if (kpf_status s = kpf_series_format(res.get(), fmt(), &text); s != KPF_OK) return report(s);
      emit(text);
      return kOk;
    }
    if (*st) {
      char* text = nullptr;
      int passed = 0;
      if (kpf_status s = kpf_selftest(energy, mutate ? 1 : 0, seed, &text, &passed); s != KPF_OK) return report(s);
      emit(text);
      return passed ? kOk : kMismatch;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what << "\n";
    return kUsage;
  }
  return kUsage;
}
