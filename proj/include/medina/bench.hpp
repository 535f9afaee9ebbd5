#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "medina/rational.hpp"

namespace medina {

inline constexpr std::uint64_t kBenchSeed = 1729;

struct BenchRow {
    unsigned long m;
    long degree;
    unsigned long points;
    double wall_time_s;
    std::size_t max_coeff_bits;
};

/// `count` rationals k / 2^20 with k uniform in [0, 2^20], from mt19937_64(seed).
std::vector<Rational> bench_points(unsigned long count, std::uint64_t seed = kBenchSeed);

/// Times nested evaluation of h_m at bench_points(points) for m = 1..m_max.
/// Polynomial construction is excluded from the timing.
std::vector<BenchRow> run_bench(unsigned long m_max, unsigned long points,
                                std::uint64_t seed = kBenchSeed);

/// "m,degree,points,wall_time,max_coeff_bits"
std::string bench_csv_header();
std::string to_csv(const BenchRow &row);

} // namespace medina
