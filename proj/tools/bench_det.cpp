// Benchmark of the OpenMP determinant kernels against the serial reference.
// Results are exact rationals, so the two paths must agree bit for bit; the
// benchmark checks that while timing them.

#include "qgi/config.hpp"
#include "qgi/nc_determinant.hpp"
#include "qgi/reference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <random>

using namespace qgi;

namespace {

std::mt19937_64 rng(20240601);

Quaternion random_quat() {
    std::uniform_int_distribution<int> num(-3, 3);
    auto r = [&]() { return Rational(num(rng)); };
    return {r(), r(), r(), r()};
}

QMatrix random_hermitian(std::size_t n) {
    QMatrix out(n, n);
    for (std::size_t i = 1; i <= n; ++i) {
        out(i, i) = Quaternion(Rational(std::uniform_int_distribution<int>(-3, 3)(rng)));
        for (std::size_t j = i + 1; j <= n; ++j) {
            out(i, j) = random_quat();
            out(j, i) = conj(out(i, j));
        }
    }
    return out;
}

template <typename Fn>
double time_ms(Fn&& fn) {
    auto begin = std::chrono::steady_clock::now();
    fn();
    auto end = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(end - begin).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t max_n = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 9;
    config::set_max_dim(max_n);

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; parallel path == serial\n");
#endif
    std::printf("%4s %14s %14s %9s  %s\n", "n", "serial ms", "parallel ms", "speedup",
                "agree");

    for (std::size_t n = 5; n <= max_n; ++n) {
        QMatrix a = random_hermitian(n);
        Quaternion serial_value, parallel_value;

        config::set_threads(1);
        double t_serial = time_ms([&] { serial_value = ref::rdet(1, a); });
        config::set_threads(0);
        double t_parallel = time_ms([&] { parallel_value = rdet(1, a); });

        std::printf("%4zu %14.2f %14.2f %8.2fx  %s\n", n, t_serial, t_parallel,
                    t_serial / t_parallel, serial_value == parallel_value ? "yes" : "NO");
        if (serial_value != parallel_value) return 1;
    }

    // replaced minor sums, the dominant kernel of the inverse formulas
    std::printf("\nrow-replaced minor sums over an n x n Hermitian host, order n-1:\n");
    std::printf("%4s %14s %14s %9s  %s\n", "n", "serial ms", "parallel ms", "speedup",
                "agree");
    for (std::size_t n = 5; n <= max_n; ++n) {
        QMatrix a = random_hermitian(n);
        std::vector<Quaternion> repl(n);
        for (auto& e : repl) e = random_quat();
        Quaternion serial_value, parallel_value;

        config::set_threads(1);
        double t_serial = time_ms([&] { serial_value = ref::rdet_minor_sum(a, 1, repl, n - 1); });
        config::set_threads(0);
        double t_parallel = time_ms([&] { parallel_value = rdet_minor_sum(a, 1, repl, n - 1); });

        std::printf("%4zu %14.2f %14.2f %8.2fx  %s\n", n, t_serial, t_parallel,
                    t_serial / t_parallel, serial_value == parallel_value ? "yes" : "NO");
        if (serial_value != parallel_value) return 1;
    }
    config::set_threads(0);
    return 0;
}
