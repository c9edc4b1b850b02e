#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padiclat/field.hpp"
#include "padiclat/xof.hpp"

namespace padiclat {

/// Public context of the benchmark family: theta a root of
/// x^n + p(x^(n-1) + ... + 1) and F the characteristic polynomial of a
/// random zeta with unit theta-coefficient (a fixed zeta from n = 500 on).
Context bench_instance(int n, unsigned long p, WordStream& rng, std::int64_t precision = kDefaultPrecision);

struct BenchRow {
  int n = 0;
  unsigned long p = 0;
  int repetition = 0;
  double millis = 0;
  std::uint64_t abs_value_count = 0;
  std::uint64_t bound = 0;  // n + p(n-1)
  std::string exponent;     // of the recovered uniformizer
};

/// One row per (n, p, repetition), ordered by n, then p.
std::vector<BenchRow> bench_uniformizer(std::vector<int> ns, std::vector<unsigned long> ps, int repetitions,
                                        std::uint64_t seed, std::int64_t precision = kDefaultPrecision);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace padiclat
