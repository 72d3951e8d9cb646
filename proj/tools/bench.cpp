/*
 * Benchmark comparing the serial elimination path against the OpenMP batch
 * path on the derivation systems (the dominant solves) and on synthetic
 * sparse systems. Both paths must produce identical subspaces; the run
 * aborts if they ever disagree.
 */

#include "qlie/liecore.hpp"
#include "qlie/prng.hpp"
#include "qlie/spfactory.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace qlie;

double ms_since(std::chrono::steady_clock::time_point start) {
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void run_case(const std::string& label, int ambient, const std::vector<SparseRow>& rows) {
  auto t0 = std::chrono::steady_clock::now();
  Subspace serial = kernel_sparse_serial(ambient, rows);
  double serial_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  Subspace parallel = kernel_sparse(ambient, rows);
  double parallel_ms = ms_since(t1);

  if (!(serial == parallel)) {
    std::cerr << "MISMATCH between serial and parallel kernels in case " << label << "\n";
    std::exit(1);
  }
  std::cout << std::left << std::setw(22) << label << std::right << std::setw(8) << rows.size()
            << std::setw(7) << ambient << std::setw(10) << std::fixed << std::setprecision(1)
            << serial_ms << std::setw(10) << parallel_ms << std::setw(9)
            << std::setprecision(2) << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << std::setw(8) << serial.dim() << "\n";
}

void derivation_case(const Signature& sig) {
  EmbeddingData e = build_embedding(sig, Variant::add_to_l);
  NonAssocAlgebra m = build_m_algebra(e);
  auto rows = derivation_rows(m.product);
  std::string label =
      "der(m) (" + std::to_string(sig.k) + "," + std::to_string(sig.l) + ")";
  run_case(label, m.dim() * m.dim(), rows);
}

void synthetic_case(int rows_n, int cols, int nnz_per_row, std::uint64_t seed) {
  Prng rng(seed);
  std::vector<SparseRow> rows;
  for (int r = 0; r < rows_n; ++r) {
    SparseCoords entries;
    for (int t = 0; t < nnz_per_row; ++t)
      entries.emplace_back(static_cast<int>(rng.next() % cols), Rational(rng.range(-5, 5)));
    SparseRow row = sparse_from_pairs(std::move(entries));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  run_case("synthetic " + std::to_string(rows_n) + "x" + std::to_string(cols), cols, rows);
}

// tall system with bounded rank: every row is a short combination of a fixed
// set of base rows, so most of the run reduces redundant rows to zero
void redundant_case(int rows_n, int cols, int rank_bound, std::uint64_t seed) {
  Prng rng(seed);
  std::vector<RealVector> bases;
  for (int b = 0; b < rank_bound; ++b) {
    RealVector base(cols, Rational(0));
    for (int t = 0; t < 10; ++t)
      base[static_cast<std::size_t>(rng.next() % cols)] = Rational(rng.range(-4, 4));
    bases.push_back(std::move(base));
  }
  std::vector<SparseRow> rows;
  for (int r = 0; r < rows_n; ++r) {
    RealVector row(cols, Rational(0));
    for (int pick = 0; pick < 3; ++pick) {
      const RealVector& base = bases[static_cast<std::size_t>(rng.next() % rank_bound)];
      Rational c(rng.range(-3, 3));
      if (c == 0) c = 1;
      for (int t = 0; t < cols; ++t)
        if (base[t] != 0) row[t] += c * base[t];
    }
    SparseRow sr = sparse_from_rational(row);
    if (!sr.empty()) rows.push_back(std::move(sr));
  }
  run_case("redundant " + std::to_string(rows_n) + "x" + std::to_string(cols), cols, rows);
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--heavy") heavy = true;

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; both paths run serially\n";
#endif
  std::cout << std::left << std::setw(22) << "case" << std::right << std::setw(8) << "rows"
            << std::setw(7) << "cols" << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(9) << "speedup" << std::setw(8) << "kernel" << "\n";

  synthetic_case(2000, 400, 12, 42);
  redundant_case(20000, 600, 90, 43);
  derivation_case({1, 1});
  derivation_case({2, 1});
  if (heavy) derivation_case({2, 2});
  return 0;
}
