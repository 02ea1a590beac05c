// Compares the OpenMP kernels against their serial references and
// reports wall times plus speedup. Exits nonzero on any mismatch.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "pptower/arith.hpp"
#include "pptower/plane_partition.hpp"

using namespace pptower;

namespace {

double timed(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");
    bool ok = true;

    struct AlphaCase {
        unsigned k, r, n;
    } alpha_cases[] = {{4, 4, 20}, {5, 3, 20}, {3, 4, 22}};
    for (auto c : alpha_cases) {
        mpz_class a, b;
        double ts = timed([&] { a = alpha_serial(c.k, c.r, c.n); });
        double tp = timed([&] { b = alpha(c.k, c.r, c.n); });
        ok = ok && a == b;
        std::printf("alpha(%u,%u,%u)%*s %10.3f %10.3f %8.2f %s\n", c.k, c.r, c.n, 14, "", ts, tp,
                    ts / tp, a == b ? "" : "MISMATCH");
    }

    struct SumCase {
        unsigned k, r;
        std::uint64_t N;
    } sum_cases[] = {{1, 0, 2'000'000}, {2, 2, 500'000}, {3, 0, 200'000}};
    for (auto c : sum_cases) {
        unsigned r = c.r == 0 ? kUnbounded : c.r;
        mpz_class a, b;
        double ts = timed([&] { a = summatory_serial(c.k, r, c.N); });
        double tp = timed([&] { b = summatory(c.k, r, c.N); });
        ok = ok && a == b;
        std::printf("summatory(%u,%s,%llu)%*s %10.3f %10.3f %8.2f %s\n", c.k,
                    c.r == 0 ? "inf" : std::to_string(c.r).c_str(),
                    static_cast<unsigned long long>(c.N), 5, "", ts, tp, ts / tp,
                    a == b ? "" : "MISMATCH");
    }

    return ok ? 0 : 1;
}
