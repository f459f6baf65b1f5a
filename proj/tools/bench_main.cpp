#include <chrono>
#include <cstdio>
#include <string>

#include "latmod/suite.hpp"

using namespace latmod;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Best-of-N wall time; the result of the first run is handed back through
// `out` so both modes can be compared for equality.
template <class F>
double bench(std::size_t reps, F&& f) {
  double best = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double ms = ms_since(t0);
    if (r == 0 || ms < best) best = ms;
  }
  return best;
}

void row(const char* name, double serial_ms, double openmp_ms, bool equal) {
  std::printf("%-18s %10.2f ms %10.2f ms   x%.2f   outputs %s\n", name, serial_ms, openmp_ms,
              serial_ms > 0 ? serial_ms / openmp_ms : 0.0, equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t reps = 3;
  if (argc > 1) {
    const std::string arg = argv[1];
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos) {
      std::printf("usage: %s [reps]\n", argv[0]);
      std::printf("best-of-reps kernel timings, openmp against the serial reference\n");
      return arg == "-h" || arg == "--help" ? 0 : 2;
    }
    reps = static_cast<std::size_t>(std::stoul(arg));
    if (reps == 0) reps = 1;
  }

  // Boolean block lattice in dimension 6: five blocks, 32 carrier elements.
  const std::size_t n = 6;
  std::vector<Subspace> atoms;
  const std::size_t blocks[6] = {0, 0, 1, 2, 3, 4};
  for (std::size_t b = 0; b < 5; ++b) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (blocks[i] == b) {
        Vector e(n);
        e[i] = Scalar(1);
        rows.push_back(e);
      }
    atoms.push_back(Subspace::span(n, rows));
  }

  std::printf("kernel                  serial        openmp  speedup (threads=%d)\n",
              par::thread_count());

  SubspaceLattice ls, lo;
  double s = bench(reps, [&] { ls = SubspaceLattice::closure(n, atoms, 512, Exec::serial); });
  double o = bench(reps, [&] { lo = SubspaceLattice::closure(n, atoms, 512, Exec::openmp); });
  bool eq = ls.elements() == lo.elements();
  row("closure", s, o, eq);

  std::vector<std::size_t> ts, to;
  s = bench(reps, [&] {
    ts = e_star_table(ls, Exec::serial);
    auto sharp = e_sharp_table(ls, Exec::serial);
    ts.insert(ts.end(), sharp.begin(), sharp.end());
  });
  o = bench(reps, [&] {
    to = e_star_table(lo, Exec::openmp);
    auto sharp = e_sharp_table(lo, Exec::openmp);
    to.insert(to.end(), sharp.begin(), sharp.end());
  });
  eq = eq && ts == to;
  row("derived maps", s, o, ts == to);

  OperatorSpace as, ao;
  s = bench(reps, [&] { as = alg(ls, Exec::serial); });
  o = bench(reps, [&] { ao = alg(lo, Exec::openmp); });
  row("alg", s, o, as == ao);

  AuditRecord rs, rw;
  s = bench(reps, [&] { rs = audit_reflexive(ls, 400, 7, Exec::serial); });
  o = bench(reps, [&] { rw = audit_reflexive(lo, 400, 7, Exec::openmp); });
  row("audit (400)", s, o, rs.verified() == rw.verified());

  OrderHom ids = OrderHom::identity(ls);
  OperatorSpace us, uo;
  s = bench(reps, [&] { us = module_from_hom_right(ls, as, ids, Exec::serial).space; });
  o = bench(reps, [&] { uo = module_from_hom_right(lo, ao, ids, Exec::openmp).space; });
  row("module solve", s, o, us == uo);

  return 0;
}
