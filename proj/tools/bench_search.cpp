// Benchmark: the point-search kernel on all threads vs one thread, plus the
// independent serial reference (direct rational evaluation) used as the test
// oracle. All three must agree exactly; timings are informational.

#include "hypheron/angle_family.hpp"
#include "hypheron/search.hpp"
#include "hypheron/side_family.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hypheron;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench(const char* name, const RatCurve& curve, long height) {
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif

    auto t0 = clock_type::now();
    const auto parallel = naive_search(curve, height);
    const double tp = seconds_since(t0);

#ifdef _OPENMP
    omp_set_num_threads(1);
#endif
    t0 = clock_type::now();
    const auto single = naive_search(curve, height);
    const double t1 = seconds_since(t0);
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif

    t0 = clock_type::now();
    const auto reference = naive_search_serial(curve, height);
    const double tr = seconds_since(t0);

    const bool same = parallel == single && single == reference;
    std::cout << name << ": height " << height << ", " << parallel.size() << " points\n"
              << "  kernel x" << max_threads << " threads " << tp << " s, kernel x1 " << t1
              << " s (speedup " << (tp > 0 ? t1 / tp : 0) << "), rational reference " << tr
              << " s" << (same ? "" : "  [MISMATCH]") << "\n";
    if (!same) std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    const long height = argc > 1 ? std::atol(argv[1]) : 4000;
    bench("equilateral median curve  y^2 = x^3+10x^2+9x", RatCurve(Rat(10), Rat(9), Rat(0)),
          height);
    bench("equilateral heron curve   y^2 = x(x^2+x+1)", RatCurve(Rat(1), Rat(1), Rat(0)), height);
    bench("side family E_{2,3}", SideFamily(Rat(2), Rat(3)).curve(), height);
    bench("angle family E_{1/2,1}", AngleFamily(Rat(1, 2), Rat(1)).curve(), height);
    return 0;
}
