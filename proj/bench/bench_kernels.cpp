// Times each OpenMP kernel against its serial reference and checks that
// both produce the same answer.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "braidq/homsearch.hpp"
#include "braidq/kernels.hpp"
#include "braidq/permgroup.hpp"
#include "braidq/welded.hpp"

using namespace braidq;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  {
    const auto g = PermGroup::symmetric(8);
    const auto elems = g.elements();
    const std::vector<Permutation> set{Permutation::from_cycles("(1 2)", 8), Permutation::from_cycles("(3 4)", 8),
                                       Permutation::from_cycles("(5 6)", 8), Permutation::from_cycles("(7 8)", 8)};
    std::vector<std::size_t> a, b;
    const double s = seconds([&] { a = kernels::conj_stabilizer_scan_serial(elems, set); }, 3);
    const double p = seconds([&] { b = kernels::conj_stabilizer_scan_omp(elems, set); }, 3);
    row("conj stabiliser scan, S8", s, p, a == b);
  }
  {
    const auto g = PermGroup::symmetric(8);
    const auto elems = g.elements();
    const std::vector<std::pair<Permutation, Permutation>> pairs{
        {Permutation::from_cycles("(1 2 3 4 5 6 7 8)", 8), Permutation::from_cycles("(8 7 6 5 4 3 2 1)", 8)},
        {Permutation::from_cycles("(1 2)", 8), Permutation::from_cycles("(7 8)", 8)}};
    std::optional<std::size_t> a, b;
    const double s = seconds([&] { a = kernels::conjugator_scan_serial(elems, pairs); }, 3);
    const double p = seconds([&] { b = kernels::conjugator_scan_omp(elems, pairs); }, 3);
    row("conjugator scan, S8", s, p, a == b);
  }
  {
    const auto pres = make_presentation(PresentationKind::Braid, 6);
    const auto g = PermGroup::symmetric(6);
    SearchResult a, b;
    const double s = seconds([&] { a = enumerate_homs_serial(pres, g); }, 1);
    const double p = seconds([&] { b = enumerate_homs(pres, g); }, 1);
    row("hom search B6 -> S6", s, p, a.homs == b.homs);
  }
  {
    const auto pres = make_presentation(PresentationKind::Welded, 4);
    const auto g = PermGroup::symmetric(5);
    SearchResult a, b;
    const double s = seconds([&] { a = enumerate_homs_serial(pres, g); }, 1);
    const double p = seconds([&] { b = enumerate_homs(pres, g); }, 1);
    row("hom search wB4 -> S5", s, p, a.homs == b.homs);
  }
  {
    // Equal in the welded quotient, not derivable in vB_n: the search runs to its budget.
    const Word w1 = Word::parse("t1 s2 s1"), w2 = Word::parse("s2 s1 t2");
    VirtualSearchConfig serial{6, 4, 400'000, false}, par{6, 4, 400'000, true};
    VirtualVerdict a, b;
    const double s = seconds([&] { a = virtual_equal_semidecide(w1, w2, 3, serial); }, 1);
    const double p = seconds([&] { b = virtual_equal_semidecide(w1, w2, 3, par); }, 1);
    row("virtual rewrite BFS, n=3", s, p, a.verdict == b.verdict && a.derivation == b.derivation);
  }
  return 0;
}
