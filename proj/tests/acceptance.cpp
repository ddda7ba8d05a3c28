// Acceptance suite: every criterion below runs at its stated tolerance (all
// identities are exact; the only numeric tolerance is the float oracle of the
// scalar kernel) and prints one PASS/FAIL line. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "sumcat/lattice_voa.hpp"
#include "sumcat/monoidal.hpp"

using namespace sumcat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, double seconds, const std::string& detail = "") {
    std::ostringstream os;
    os << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " [" << std::fixed;
    os.precision(2);
    os << seconds << "s]";
    if (!detail.empty()) os << " -- " << detail;
    std::cout << os.str() << "\n";
    if (!ok) ++failures;
}

template <typename F>
void criterion(int id, const std::string& what, F&& body) {
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    report(id, what, ok, secs, detail);
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(SUMCAT_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
    criterion(1, "pipeline tables equal reference tables for N=1..8, <10s per N", [](std::string& detail) {
        for (int64_t N = 1; N <= 8; ++N) {
            auto t0 = Clock::now();
            auto rep = compare_with_reference(N);
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (!rep.passed() || secs >= 10.0) {
                detail = "N=" + std::to_string(N) + (rep.passed() ? " too slow" : " mismatch");
                return false;
            }
            if (run_cli("compare --N " + std::to_string(N)) != 0) {
                detail = "CLI compare --N " + std::to_string(N) + " exited nonzero";
                return false;
            }
        }
        return true;
    });

    criterion(2, "semion data at N=1 is exactly {1,i; braid(1,1)=i; assoc(1,1,1)=-1; Z/2}",
              [](std::string& detail) {
                  Rep0Tables t = rep0_tables(1);
                  bool ok = t.twist == std::vector<QQ>{QQ(0), q_make(1, 2)} &&
                            t.braid[1][1] == q_make(1, 2) && t.assoc[1][1][1] == 1 &&
                            t.fusion[0][0] == FusionCell{0, 0} && t.fusion[0][1] == FusionCell{1, 0} &&
                            t.fusion[1][0] == FusionCell{1, 0} && t.fusion[1][1] == FusionCell{0, 2} &&
                            t.braid[0][0] == 0 && t.braid[0][1] == 0 && t.braid[1][0] == 0;
                  if (!ok) detail = tables_to_json(t);
                  return ok;
              });

    criterion(3, "chain associator = (-1)^{x·k(y,z)} for N<=4, window [-3,3]^3, constant, <30s",
              [](std::string& detail) {
                  auto t0 = Clock::now();
                  auto within_budget = [&] {
                      return std::chrono::duration<double>(Clock::now() - t0).count() < 30.0;
                  };
                  for (int64_t N = 1; N <= 4; ++N)
                      for (int64_t a = 0; a < 2 * N; ++a)
                          for (int64_t b = 0; b < 2 * N; ++b)
                              for (int64_t c = 0; c < 2 * N; ++c) {
                                  Phase got = associator_via_chain(N, a, b, c, 3);
                                  QQ want = q_mod2(q_make(a * cocycle_k(N, b, c), 2 * N));
                                  if (got.exponent() != want) {
                                      std::ostringstream os;
                                      os << "N=" << N << " (" << a << "," << b << "," << c << "): chain "
                                         << got.str() << " vs closed form " << q_str(want);
                                      detail = os.str();
                                      return false;
                                  }
                              }
                  if (!within_budget()) {
                      detail = "exceeded the 30s budget";
                      return false;
                  }
                  return true;
              });

    criterion(4, "output coherence (pentagon/hexagon/balancing/triangle) exact for N<=6",
              [](std::string& detail) {
                  for (int64_t N = 1; N <= 6; ++N) {
                      auto rep = verify_output_coherence(N);
                      if (!rep.passed()) {
                          detail = "N=" + std::to_string(N) + ": " + rep.to_json().dump();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(5, "locality with d=4: local iff label divisible by 4, for N<=3, labels 0..8Nd",
              [](std::string& detail) {
                  for (int64_t N = 1; N <= 3; ++N) {
                      AlgebraObject alg = lattice_algebra(N, 4);
                      for (int64_t m = 0; m <= 8 * N * 4; ++m) {
                          bool loc = is_local(alg, induce(alg, m), CheckMode::Symbolic);
                          Phase mono = monodromy_scalar(*alg.A.base, {alg.lattice_step()}, {m});
                          bool expected = (m % 4 == 0);
                          if (loc != expected || mono.is_one() != expected) {
                              detail = "N=" + std::to_string(N) + " label=" + std::to_string(m);
                              return false;
                          }
                      }
                      auto rep = locality_report(alg, 8 * N * 4, CheckMode::Symbolic);
                      bool noted = false;
                      for (const auto& note : rep.notes)
                          if (note.find("double braiding") != std::string::npos) noted = true;
                      if (!rep.passed() || !noted) {
                          detail = "locality report must pass and note the closed-form discrepancy";
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "algebra axioms symbolic AND window [-5,5]^2 for N<=8; cocycle condition on LxL",
              [](std::string& detail) {
                  for (int64_t N = 1; N <= 8; ++N) {
                      AlgebraObject alg = lattice_algebra(N, 1);
                      if (!check_algebra_axioms(alg, CheckMode::Symbolic).passed() ||
                          !check_algebra_axioms(alg, CheckMode::Window, 5).passed() ||
                          !check_mu_cocycle_condition(N, 1, 5).passed()) {
                          detail = "N=" + std::to_string(N);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "quotient identification for N<=4, all (x,y), window [-3,3]^2; corrupted control fails",
              [](std::string& detail) {
                  for (int64_t N = 1; N <= 4; ++N)
                      for (int64_t x = 0; x < 2 * N; ++x)
                          for (int64_t y = 0; y < 2 * N; ++y)
                              if (!check_quotient_identification(N, 1, x, y, 3).passed()) {
                                  std::ostringstream os;
                                  os << "N=" << N << " x=" << x << " y=" << y;
                                  detail = os.str();
                                  return false;
                              }
                  if (check_quotient_identification(1, 1, 1, 1, 3, true).passed()) {
                      detail = "corrupted-exponent control unexpectedly passed";
                      return false;
                  }
                  return true;
              });

    criterion(8, ">=1000 randomized completion-law trials over cyclic bases, zero failures, <60s",
              [](std::string& detail) {
                  auto t0 = Clock::now();
                  uint64_t total = 0;
                  for (int64_t n : {2, 3, 4, 5}) {
                      auto base = cyclic_data(n);
                      for (auto law : all_completion_laws()) {
                          auto rep = check_completion_coherence(law, base, 20, 6,
                                                                0x5eedULL + static_cast<uint64_t>(n));
                          total += rep.tuples_checked;
                          if (!rep.passed()) {
                              detail = "n=" + std::to_string(n) + " law=" + law_name(law);
                              return false;
                          }
                      }
                  }
                  if (total < 1000) {
                      detail = "only " + std::to_string(total) + " trials";
                      return false;
                  }
                  if (std::chrono::duration<double>(Clock::now() - t0).count() >= 60.0) {
                      detail = "exceeded the 60s budget";
                      return false;
                  }
                  detail = std::to_string(total) + " trials";
                  return true;
              });

    criterion(9, "exact kernel: root-of-unity sums vanish (n=2..24); 10000 random values match the float oracle",
              [](std::string& detail) {
                  for (int n = 2; n <= 24; ++n) {
                      CycNum s;
                      for (int j = 0; j < n; ++j) s = s + CycNum::from_phase(Phase::of(2 * j, n));
                      if (!s.is_zero() || std::abs(s.approx()) >= 1e-9) {
                          detail = "n=" + std::to_string(n);
                          return false;
                      }
                  }
                  std::mt19937_64 rng(0xacce97);
                  const long dens[] = {1, 2, 3, 4, 6, 8, 12, 24};
                  auto rnd = [&](int64_t lo, int64_t hi) {
                      return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
                  };
                  auto rnd_cyc = [&]() {
                      CycNum v;
                      int terms = static_cast<int>(rnd(1, 3));
                      for (int i = 0; i < terms; ++i) {
                          long den = dens[rnd(0, 7)];
                          long num = 0;
                          while (num == 0) num = static_cast<long>(rnd(-4, 4));
                          v = v + CycNum::monomial(q_make(num, dens[rnd(0, 2)]),
                                                   Phase::of(rnd(0, 2 * den - 1), den));
                      }
                      return v;
                  };
                  for (int i = 0; i < 10000; ++i) {
                      CycNum a = rnd_cyc(), b = rnd_cyc();
                      CycNum v = (i % 2 == 0) ? a + b : a * b;
                      bool exact = v.is_zero();
                      bool oracle = std::abs(v.approx()) < 1e-9;
                      if (exact != oracle) {
                          detail = "disagreement at trial " + std::to_string(i) + ": " + v.str();
                          return false;
                      }
                  }
                  return true;
              });

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
