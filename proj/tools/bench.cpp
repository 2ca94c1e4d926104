#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "spancalc/diagram.hpp"
#include "spancalc/parallel.hpp"
#include "spancalc/span.hpp"

using namespace spancalc;

namespace {

double median_ms(int repeats, const std::function<void()>& work) {
  std::vector<double> times;
  times.reserve(repeats);
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    work();
    times.push_back(std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

struct Row {
  std::string name;
  double serial_ms = 0, parallel_ms = 0;
};

Row compare_paths(const std::string& name, int repeats,
                  const std::function<void()>& work) {
  Row row{name, 0, 0};
  set_parallel_override(0);
  work();  // warm the word-span and groupoid caches once, off the clock
  row.serial_ms = median_ms(repeats, work);
  set_parallel_override(1);
  row.parallel_ms = median_ms(repeats, work);
  set_parallel_override(-1);
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "compare the serial reference paths against the OpenMP kernels"};
  int max_card = 5;
  int repeats = 3;
  app.add_option("--max-card", max_card, "cardinality window")
      ->capture_default_str();
  app.add_option("--repeats", repeats, "timings per workload (median wins)")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "spancalc benchmark: window " << max_card << ", " << repeats
            << " repeat(s), " << threads << " thread(s)\n\n";

  bool agree = true;
  std::vector<Row> rows;

  // Catalog checking parallelizes over relations.
  std::size_t passed_serial = 0, passed_parallel = 0;
  const auto catalog = heisenberg_catalog();
  rows.push_back(compare_paths("relation catalog", repeats, [&] {
    std::size_t good = 0;
    for (const auto& r : check_catalog(catalog, max_card)) good += r.pass;
    if (parallel_enabled())
      passed_parallel = good;
    else
      passed_serial = good;
  }));
  agree = agree && passed_serial == passed_parallel &&
          passed_serial == catalog.size();

  // Word evaluation parallelizes over boundary classes.
  const Word zigzag{lower_letter(), raise_letter(), lower_letter()};
  int comps_serial = 0, comps_parallel = 0;
  rows.push_back(compare_paths("word span -0 +0 -0", repeats, [&] {
    const Span s = flat_word_span(zigzag, max_card);
    if (parallel_enabled())
      comps_parallel = s.apex->size();
    else
      comps_serial = s.apex->size();
  }));
  agree = agree && comps_serial == comps_parallel;

  // Composition parallelizes over apex-component pairs.
  const Span lower = annihilation_span(max_card);
  const Span raise = creation_span(max_card);
  int comp2_serial = 0, comp2_parallel = 0;
  rows.push_back(compare_paths("compose lower after raise", repeats, [&] {
    const Span s = compose(lower, raise);
    if (parallel_enabled())
      comp2_parallel = s.apex->size();
    else
      comp2_serial = s.apex->size();
  }));
  agree = agree && comp2_serial == comp2_parallel;

  std::cout << std::fixed << std::setprecision(1);
  for (const auto& row : rows)
    std::cout << std::left << std::setw(28) << row.name << std::right
              << "serial " << std::setw(8) << row.serial_ms << " ms   "
              << "parallel " << std::setw(8) << row.parallel_ms << " ms   "
              << "speedup " << std::setprecision(2)
              << row.serial_ms / std::max(row.parallel_ms, 0.001) << "x\n"
              << std::setprecision(1);

  // The indexed composition against the brute-force reference it replaced;
  // the reference enumerates whole morphism triples, so keep its window low.
  const int raw_card = std::min(max_card, 4);
  const Span lo = annihilation_span(raw_card);
  const Span hi = creation_span(raw_card);
  set_parallel_override(0);
  const double indexed = median_ms(repeats, [&] { compose(lo, hi); });
  const double raw = median_ms(repeats, [&] { compose_raw_triples(lo, hi); });
  set_parallel_override(-1);
  agree = agree && spans_isomorphic(compose(lo, hi),
                                    compose_raw_triples(lo, hi), raw_card);
  std::cout << "\nindexed compose vs raw-triple reference (window " << raw_card
            << ", serial)\n"
            << "  indexed " << std::setw(8) << indexed << " ms\n"
            << "  raw     " << std::setw(8) << raw << " ms\n\n";

  std::cout << (agree ? "all paths agree\n" : "PATHS DISAGREE\n");
  return agree ? 0 : 1;
}
