// Timing comparison between the OpenMP kernels and their serial references:
// polynomial products, transvectants against the primed-variable oracle, and
// the layered catalog build.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qovar/catalog.hpp"
#include "qovar/transvect.hpp"

using namespace qovar;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timeit(F&& f) {
    auto t0 = Clock::now();
    f();
    return secs(t0, Clock::now());
}

}  // namespace

int main(int argc, char** argv) {
    int dmax = argc > 1 ? std::atoi(argv[1]) : 8;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

    Catalog cat = Catalog::build(std::min(dmax, 7));
    Poly f = cat.at(kGroundForm);
    Poly e = cat.at(CovariantSymbol::parse("E_1111"));
    Poly g7 = cat.at(CovariantSymbol::parse("G_5111"));

    // poly multiply: parallel vs serial reference
    Poly prod_par, prod_ser;
    double tp = timeit([&] { prod_par = e * g7; });
    double ts = timeit([&] { prod_ser = mul_serial(e, g7); });
    std::cout << "poly mul E_1111*G_5111 (" << e.nterms() << " x " << g7.nterms()
              << " terms): parallel " << tp << "s, serial " << ts << "s, equal: "
              << (prod_par == prod_ser ? "yes" : "NO") << "\n";

    // transvectant: production closed form vs primed-variable oracle
    TransvectantIndex idx{1, 0, 1, 1};
    Poly tv, tv_oracle;
    double t1 = timeit([&] { tv = transvectant(f, g7, idx); });
    double t2 = timeit([&] { tv_oracle = oracle_transvectant(f, g7, idx); });
    std::cout << "transvectant (f,G_5111)^{1011}: production " << t1 << "s, oracle " << t2
              << "s, equal: " << (tv == tv_oracle ? "yes" : "NO") << "\n";

    // catalog layers
    double tb = timeit([&] { Catalog::build(dmax); });
    std::cout << "catalog build to degree " << dmax << ": " << tb << "s\n";
#ifdef _OPENMP
    int save = omp_get_max_threads();
    omp_set_num_threads(1);
    double tb1 = timeit([&] { Catalog::build(dmax); });
    omp_set_num_threads(save);
    std::cout << "catalog build to degree " << dmax << " (1 thread): " << tb1 << "s\n";
#endif
    return 0;
}
