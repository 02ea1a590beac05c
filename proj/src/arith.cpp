#include "pptower/arith.hpp"

#include <cmath>
#include <stdexcept>

#include "pptower/plane_partition.hpp"

namespace pptower {

SpfSieve::SpfSieve(std::uint64_t limit) : spf_(limit + 1, 0) {
    if (limit >= 1) spf_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::vector<std::uint32_t> SpfSieve::primes() const {
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i < spf_.size(); ++i)
        if (spf_[i] == i) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int moebius(std::uint64_t n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

namespace {

// alpha_{k,r}(a) for a = 0..a_max; r = kUnbounded takes alpha-bar.
std::vector<mpz_class> alpha_cache(unsigned k, unsigned r, unsigned a_max) {
    if (r == kUnbounded) return alpha_table(k, std::max(a_max, 1u), a_max);
    return alpha_table(k, r, a_max);
}

unsigned max_exponent(std::uint64_t N) {
    unsigned a = 0;
    while ((1ull << (a + 1)) <= N) ++a;
    return a;
}

}  // namespace

mpz_class dirichlet_coeff(unsigned k, unsigned r, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("dirichlet_coeff: n must be >= 1");
    auto factors = factorize(n);
    unsigned a_max = 0;
    for (auto [p, e] : factors) a_max = std::max(a_max, e);
    auto alpha = alpha_cache(k, r, a_max);
    mpz_class out = 1;
    for (auto [p, e] : factors) out *= alpha[e];
    return out;
}

DirichletTable::DirichletTable(unsigned k, unsigned r, std::uint64_t N) : k_(k), r_(r) {
    auto alpha = alpha_cache(k, r, std::max(max_exponent(N), 1u));
    SpfSieve sieve(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
        mpz_class a = 1;
        std::uint64_t m = n;
        while (m > 1) {
            std::uint64_t p = sieve.spf(m);
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            a *= alpha[e];
        }
        coeffs_.emplace(n, std::move(a));
    }
}

mpz_class DirichletTable::summatory(std::uint64_t N) const {
    mpz_class s = 0;
    for (const auto& [n, a] : coeffs_) {
        if (n > N) break;
        s += a;
    }
    return s;
}

namespace {

mpz_class coeff_from_spf(const SpfSieve& sieve, const std::vector<mpz_class>& alpha,
                         std::uint64_t n) {
    mpz_class a = 1;
    while (n > 1) {
        std::uint64_t p = sieve.spf(n);
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        a *= alpha[e];
    }
    return a;
}

}  // namespace

mpz_class summatory_serial(unsigned k, unsigned r, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("summatory: N must be >= 1");
    auto alpha = alpha_cache(k, r, std::max(max_exponent(N), 1u));
    SpfSieve sieve(N);
    mpz_class sum = 1;  // n = 1
    for (std::uint64_t n = 2; n <= N; ++n) sum += coeff_from_spf(sieve, alpha, n);
    return sum;
}

mpz_class summatory(unsigned k, unsigned r, std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("summatory: N must be >= 1");
    auto alpha = alpha_cache(k, r, std::max(max_exponent(N), 1u));
    SpfSieve sieve(N);
    mpz_class total = 1;  // n = 1
#pragma omp parallel
    {
        mpz_class local = 0;
#pragma omp for schedule(static) nowait
        for (long long n = 2; n <= static_cast<long long>(N); ++n)
            local += coeff_from_spf(sieve, alpha, static_cast<std::uint64_t>(n));
#pragma omp critical
        total += local;
    }
    return total;
}

std::vector<GrowthSample> fit_growth(unsigned k, unsigned r,
                                     const std::vector<std::uint64_t>& samples) {
    std::vector<GrowthSample> out;
    for (std::uint64_t N : samples) {
        if (N < 16) throw std::invalid_argument("fit_growth: samples must be >= 16");
        mpz_class s = summatory(k, r, N);
        double logN = std::log(static_cast<double>(N));
        double denom = static_cast<double>(N) * std::pow(logN, static_cast<double>(k) - 1.0);
        out.push_back({N, s, mpz_get_d(s.get_mpz_t()) / denom});
    }
    return out;
}

std::vector<mpq_class> log_series(const std::vector<mpz_class>& coeffs) {
    if (coeffs.empty() || coeffs[0] != 1)
        throw std::invalid_argument("log_series: constant term must be 1");
    unsigned M = static_cast<unsigned>(coeffs.size()) - 1;
    // n a_n = sum_{j=1}^{n} j B_j a_{n-j}
    std::vector<mpq_class> B(M + 1, 0);
    for (unsigned n = 1; n <= M; ++n) {
        mpq_class acc = mpq_class(n) * mpq_class(coeffs[n]);
        for (unsigned j = 1; j < n; ++j) acc -= mpq_class(j) * B[j] * mpq_class(coeffs[n - j]);
        B[n] = acc / mpq_class(n);
        B[n].canonicalize();
    }
    return {B.begin() + 1, B.end()};
}

std::vector<mpz_class> beta_series(unsigned k, unsigned r, unsigned M) {
    if (M == 0) throw std::invalid_argument("beta_series: M must be >= 1");
    std::vector<mpq_class> B = log_series(alpha_cache(k, r, M));
    std::vector<mpz_class> out(M);
    for (unsigned m = 1; m <= M; ++m) {
        mpq_class acc = 0;
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d) continue;
            acc += mpq_class(moebius(m / d)) * mpq_class(d, m) * B[d - 1];
        }
        acc.canonicalize();
        if (acc.get_den() != 1) throw std::logic_error("beta: non-integer exponent");
        out[m - 1] = acc.get_num();
    }
    return out;
}

mpz_class beta(unsigned k, unsigned r, unsigned m, unsigned M) {
    if (m == 0 || m > M) throw std::invalid_argument("beta: need 1 <= m <= M");
    return beta_series(k, r, M)[m - 1];
}

mpz_class beta_bar(unsigned k, unsigned m) { return beta(k, m, m, m); }

EulerEval euler_eval(unsigned k, unsigned r, double s, std::uint64_t P, unsigned M) {
    if (s <= 1.0) throw std::invalid_argument("euler_eval: s must be > 1");
    // with r unbounded, coefficients through x^M only need rank M
    std::vector<mpz_class> coeffs = alpha_cache(k, r == kUnbounded ? M : r, M);
    std::vector<double> a(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = mpz_get_d(coeffs[i].get_mpz_t());
    SpfSieve sieve(P);
    double value = 1.0, last = 0.0;
    for (std::uint32_t p : sieve.primes()) {
        double x = std::pow(static_cast<double>(p), -s);
        double f = 0.0, xa = 1.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            f += a[i] * xa;
            xa *= x;
        }
        value *= f;
        last = f - 1.0;
    }
    return {value, last};
}

double zeta_euler(double s, std::uint64_t P) {
    if (s <= 1.0) throw std::invalid_argument("zeta_euler: s must be > 1");
    SpfSieve sieve(P);
    double value = 1.0;
    for (std::uint32_t p : sieve.primes()) value /= 1.0 - std::pow(static_cast<double>(p), -s);
    return value;
}

}  // namespace pptower
