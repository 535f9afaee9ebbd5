#include "medina/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "medina/errors.hpp"
#include "medina/medina.hpp"

namespace medina {

std::vector<Rational> bench_points(unsigned long count, std::uint64_t seed) {
    constexpr long kDenominator = 1L << 20;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, kDenominator);
    std::vector<Rational> out;
    out.reserve(count);
    for (unsigned long i = 0; i < count; ++i) {
        out.emplace_back(dist(rng), kDenominator);
    }
    return out;
}

std::vector<BenchRow> run_bench(unsigned long m_max, unsigned long points, std::uint64_t seed) {
    if (m_max < 1 || points < 1) {
        throw DomainError("bench needs m_max >= 1 and points >= 1");
    }
    const std::vector<Rational> xs = bench_points(points, seed);
    std::vector<BenchRow> rows;
    rows.reserve(m_max);
    for (unsigned long m = 1; m <= m_max; ++m) {
        auto entry = pair(MedinaIndex(static_cast<long>(m)));
        Rational sink;
        auto start = std::chrono::steady_clock::now();
        for (const auto &x : xs) {
            sink += eval_horner(entry->h, x);
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back({m, entry->h.degree(), points, elapsed.count(), max_coeff_bits(entry->h)});
    }
    return rows;
}

std::string bench_csv_header() {
    return "m,degree,points,wall_time,max_coeff_bits";
}

std::string to_csv(const BenchRow &row) {
    std::ostringstream out;
    out << row.m << ',' << row.degree << ',' << row.points << ',' << row.wall_time_s << ','
        << row.max_coeff_bits;
    return out.str();
}

} // namespace medina
