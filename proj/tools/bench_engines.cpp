/**
 * @file bench_engines.cpp
 * @brief Benchmark comparing the OpenMP kernels against their serial
 *        reference implementations on the built-in corpus.
 *
 * For every case the serial and parallel variants are timed from a cold
 * memo cache and their values compared; a mismatch aborts with exit 1.
 */
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "fixtures.hpp"
#include "graphmodel.hpp"
#include "jaeger.hpp"
#include "memo.hpp"

namespace {

using namespace kauffman;

double time_ms(const std::function<LaurentPoly()>& f, LaurentPoly& out) {
  skein_memo_clear();
  const auto start = std::chrono::steady_clock::now();
  out = f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool bench_case(const std::string& label, const std::function<LaurentPoly()>& serial,
                const std::function<LaurentPoly()>& parallel) {
  LaurentPoly vs, vp;
  const double ts = time_ms(serial, vs);
  const double tp = time_ms(parallel, vp);
  const bool ok = vs == vp;
  std::printf("%-34s %10.2f ms %10.2f ms %7.2fx  %s\n", label.c_str(), ts, tp,
              tp > 0 ? ts / tp : 0.0, ok ? "values equal" : "VALUE MISMATCH");
  return ok;
}

FourValentGraph theta_graph() {
  PlanarMap m;
  m.sites = 2;
  m.pairing = {7, 6, 5, 4, 3, 2, 1, 0};
  m.outer_dart = 0;
  return FourValentGraph{m};
}

}  // namespace

int main() {
  std::printf("engine benchmark: serial reference vs OpenMP (%d thread%s)\n",
              omp_get_max_threads(), omp_get_max_threads() == 1 ? "" : "s");
  std::printf("%-34s %13s %13s %8s\n", "case", "serial", "parallel", "speedup");

  bool ok = true;
  for (const std::string name : {"trefoil_right", "figure_eight"}) {
    const LinkDiagram d = fixture(name);
    for (int n = 2; n <= 3; ++n) {
      ok &= bench_case("jaeger " + name + " n=" + std::to_string(n),
                       [&] { return jaeger_kauffman_serial(d, n); },
                       [&] { return jaeger_kauffman(d, n); });
    }
    ok &= bench_case("graph-resolution " + name + " n=2",
                     [&] { return kauffman_state_sum_serial(d, 2); },
                     [&] { return kauffman_state_sum(d, 2); });
  }
  for (int n = 2; n <= 4; ++n) {
    ok &= bench_case("graph-eval theta n=" + std::to_string(n),
                     [&] { return graph_eval_serial(theta_graph(), n); },
                     [&] { return graph_eval(theta_graph(), n); });
  }
  return ok ? 0 : 1;
}
