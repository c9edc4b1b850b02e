#include "padiclat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "padiclat/attack.hpp"

namespace padiclat {

Context bench_instance(int n, unsigned long p, WordStream& rng, std::int64_t precision) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "n must be at least 2");
  std::vector<mpq_class> f(static_cast<std::size_t>(n), mpq_class(mpz_class(p)));
  f.push_back(1);
  const Context theta = FieldContext::make(p, precision, f, n, 1);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<long> z(static_cast<std::size_t>(n), 0);
    if (n >= 500) {
      z[0] = -1;
      z[1] = 1;
      z[3] = -1;
      z[100] = 1;
    } else {
      for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = static_cast<long>(rng.next_below(p));
      z[1] = 1 + static_cast<long>(rng.next_below(p - 1));
    }
    try {
      Poly F = char_poly(theta, FieldElement::from_integers(theta, z));
      return FieldContext::make(p, precision, std::move(F), n, 1);
    } catch (const Error& e) {
      // A vanishing coefficient cannot be certified; draw another zeta.
      if (e.kind() != ErrorKind::PrecisionExhausted || n >= 500) throw;
    }
  }
  fail(ErrorKind::PrecisionExhausted, "no benchmark instance with certified coefficients");
}

std::vector<BenchRow> bench_uniformizer(std::vector<int> ns, std::vector<unsigned long> ps, int repetitions,
                                        std::uint64_t seed, std::int64_t precision) {
  std::sort(ns.begin(), ns.end());
  std::sort(ps.begin(), ps.end());
  std::vector<BenchRow> rows;
  for (int n : ns)
    for (unsigned long p : ps)
      for (int rep = 0; rep < repetitions; ++rep) {
        std::vector<std::uint8_t> cell;
        for (std::uint64_t x : {seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p),
                                static_cast<std::uint64_t>(rep)})
          for (int i = 0; i < 8; ++i) cell.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
        Shake256Stream rng(std::move(cell));
        const Context ctx = bench_instance(n, p, rng, precision);
        const auto start = std::chrono::steady_clock::now();
        const Uniformizer u = recover_uniformizer(ctx);
        const auto stop = std::chrono::steady_clock::now();
        BenchRow row;
        row.n = n;
        row.p = p;
        row.repetition = rep;
        row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
        row.abs_value_count = u.abs_value_count;
        row.bound = static_cast<std::uint64_t>(n) + p * static_cast<std::uint64_t>(n - 1);
        row.exponent = u.lambda2.exponent_string();
        rows.push_back(std::move(row));
      }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,p,repetition,millis,abs_value_count,bound,exponent\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& r : rows)
    out << r.n << ',' << r.p << ',' << r.repetition << ',' << r.millis << ',' << r.abs_value_count << ',' << r.bound
        << ',' << r.exponent << '\n';
  return out.str();
}

}  // namespace padiclat
