// Serial reference vs OpenMP kernels on the catalog groups.
//
//   orbispec_bench [repeats]

#include "orbispec/catalog.hpp"
#include "orbispec/isotropy.hpp"
#include "orbispec/lattice.hpp"
#include "orbispec/spectrum.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace orbispec;

namespace {

double best_ms(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

int mismatches = 0;

void row(const std::string& what, double serial, double parallel, bool same) {
  if (!same) ++mismatches;
  std::printf("%-34s %10.2f %10.2f %7.2fx  %s\n", what.c_str(), serial, parallel, serial / parallel,
              same ? "same" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  for (const auto& name : {"flat1", "flat2", "flat5"}) {
    const auto& p = catalog::get(name).flat();
    Lattice d = dual(p.g1.lattice);
    const Rational cutoff(100);
    std::vector<BallPoint> a, b;
    double s = best_ms(repeats, [&] { a = enumerate_ball_serial(d, cutoff); });
    double q = best_ms(repeats, [&] { b = enumerate_ball(d, cutoff); });
    row(std::string(name) + " ball mu<=100", s, q, a.size() == b.size());
  }

  for (const auto& name : {"flat1", "flat3", "flat5"}) {
    const auto& g = catalog::get(name).flat().g2;
    SpectrumTable a, b;
    double s = best_ms(repeats, [&] { a = spectrum_table_serial(g, 1, Rational(25)); });
    double q = best_ms(repeats, [&] { b = spectrum_table(g, 1, Rational(25)); });
    row(std::string(name) + ".g2 spectrum k=1 mu<=25", s, q, a.entries == b.entries);
  }

  for (const auto& name : {"flat2", "flat5"}) {
    const auto& g = catalog::get(name).flat().g2;
    std::vector<SingularFlat> a, b;
    double s = best_ms(repeats, [&] { a = singular_flats_serial(g); });
    double q = best_ms(repeats, [&] { b = singular_flats(g); });
    row(std::string(name) + ".g2 singular flats", s, q, a.size() == b.size());
  }
  return mismatches == 0 ? 0 : 1;
}
