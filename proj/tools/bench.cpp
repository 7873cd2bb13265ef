#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "quadunit/families.hpp"
#include "quadunit/sweeps.hpp"

using namespace quadunit;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& fn) {
  double t0 = now_seconds();
  fn();
  return now_seconds() - t0;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s %9.3f s %9.3f s %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timings for the N-sweeps"};
  long long agreement_max = 4000;
  long long kernel_max = 2000;
  long long family_a_max = 301;
  app.add_option("--agreement-max", agreement_max, "sweep bound for the unit-index records");
  app.add_option("--kernel-max", kernel_max, "sweep bound for the class-number records");
  app.add_option("--family-a-max", family_a_max, "largest family parameter to verify");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", max_threads());
  std::printf("%-28s %11s %11s %9s\n", "sweep", "serial", "parallel", "speedup");

  {
    std::vector<AgreementRecord> a, b;
    double ts = timed([&] { a = agreement_sweep(agreement_max, Exec::Serial); });
    double tp = timed([&] { b = agreement_sweep(agreement_max, Exec::Parallel); });
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i].N == b[i].N && a[i].e == b[i].e && a[i].consistent() && b[i].consistent()))
        throw std::runtime_error("agreement sweep mismatch");
    }
    report("agreement_sweep", ts, tp);
  }

  {
    std::vector<KernelRecord> a, b;
    double ts = timed([&] { a = kernel_sweep(kernel_max, Exec::Serial); });
    double tp = timed([&] { b = kernel_sweep(kernel_max, Exec::Parallel); });
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i].N == b[i].N && a[i].kernel_order == b[i].kernel_order && a[i].consistent()))
        throw std::runtime_error("kernel sweep mismatch");
    }
    report("kernel_sweep", ts, tp);
  }

  {
    std::vector<FamilyRow> a, b;
    double ts = timed([&] {
      a = survey(FamilyKind::A2P4, 3, family_a_max, kDefaultMaxSteps, Exec::Serial);
    });
    double tp = timed([&] {
      b = survey(FamilyKind::A2P4, 3, family_a_max, kDefaultMaxSteps, Exec::Parallel);
    });
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i].a == b[i].a && a[i].observed_e == b[i].observed_e))
        throw std::runtime_error("survey mismatch");
    }
    report("family_survey(a2+4)", ts, tp);
  }

  return 0;
}
