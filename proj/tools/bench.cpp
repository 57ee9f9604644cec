// Benchmark: serial reference engines vs the frontier-parallel OpenMP kernels
// on representative search and Ramsey workloads. Verifies that both sides
// return identical results before timing them.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ordmatch/json_io.hpp"
#include "ordmatch/ramsey.hpp"
#include "ordmatch/search.hpp"

using namespace ordmatch;

namespace {

template <typename F>
double time_of(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SearchCase {
  std::string name;
  int n;
  std::vector<PatternSpec> forbidden;
};

}  // namespace

int main() {
  const std::vector<SearchCase> cases = {
      {"nest k=3 n=8", 8, {{PatternKind::Nest, 3}}},
      {"cross k=3 n=8", 8, {{PatternKind::Cross, 3}}},
      {"noncross k=3 n=8", 8, {{PatternKind::NonCross, 3}}},
      {"nonsep k=3 n=8", 8, {{PatternKind::NonSep, 3}}},
      {"nonnest k=3 n=8", 8, {{PatternKind::NonNest, 3}}},
      {"nonnest k=2 n=9", 9, {{PatternKind::NonNest, 2}}},
      {"altpath t=4 n=8", 8, {{PatternKind::AltPath, 4}}},
  };
  const int hw = omp_get_max_threads();
  std::printf("hardware threads: %d\n\n", hw);
  std::printf("%-20s %12s %12s %12s %10s\n", "turan case", "serial(ms)", "1 worker", "parallel",
              "speedup");
  for (const SearchCase& c : cases) {
    SearchOptions serial_opts;
    serial_opts.workers = 1;
    SearchOptions par_opts;
    par_opts.workers = hw;

    SearchReport ref, one, par;
    double t_ref = time_of([&] { ref = exact_turan_serial(c.n, c.forbidden, serial_opts); });
    double t_one = time_of([&] { one = exact_turan(c.n, c.forbidden, serial_opts); });
    double t_par = time_of([&] { par = exact_turan(c.n, c.forbidden, par_opts); });
    bool same = ref.value == one.value && one.value == par.value &&
                one.witnesses == par.witnesses && ref.witnesses == one.witnesses;
    std::printf("%-20s %12.2f %12.2f %12.2f %9.2fx %s\n", c.name.c_str(), t_ref * 1e3,
                t_one * 1e3, t_par * 1e3, t_par > 0 ? t_one / t_par : 0.0,
                same ? "" : "RESULT MISMATCH");
  }

  std::printf("\n%-20s %12s %12s %12s %10s\n", "ramsey case", "serial(ms)", "1 worker",
              "parallel", "speedup");
  const std::vector<std::pair<std::string, PatternSpec>> rcases = {
      {"altpath t=4", {PatternKind::AltPath, 4}},
      {"nonnest k=2", {PatternKind::NonNest, 2}},
      {"nonnest k=3", {PatternKind::NonNest, 3}},
  };
  for (const auto& [name, target] : rcases) {
    RamseyOptions serial_opts;
    serial_opts.workers = 1;
    RamseyOptions par_opts;
    par_opts.workers = hw;
    const int nmax = target.kind == PatternKind::NonNest && target.size == 3 ? 9 : 8;

    RamseyReport ref, one, par;
    double t_ref = time_of([&] { ref = find_ramsey_serial(target, nmax, serial_opts); });
    double t_one = time_of([&] { one = find_ramsey(target, nmax, serial_opts); });
    double t_par = time_of([&] { par = find_ramsey(target, nmax, par_opts); });
    bool same = encode_ramsey_report(ref) == encode_ramsey_report(one) &&
                encode_ramsey_report(one) == encode_ramsey_report(par);
    std::printf("%-20s %12.2f %12.2f %12.2f %9.2fx %s\n", name.c_str(), t_ref * 1e3, t_one * 1e3,
                t_par * 1e3, t_par > 0 ? t_one / t_par : 0.0, same ? "" : "RESULT MISMATCH");
  }
  return 0;
}
