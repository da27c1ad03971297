// Compares the serial reference tuple-scan kernels with the OpenMP variants
// on a large strongly-admissible workload and checks they agree.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <vector>

#include "nspat/interact.hpp"
#include "nspat/scan.hpp"
#include "nspat/semigroup.hpp"

using namespace nspat;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  // A semigroup with a large conductor and a length-5 pattern give a scan
  // space of hundreds of millions of tuples.
  auto sg = NumericalSemigroup::from_generators({9, 31});
  Pattern p({1, 1, 1, 1, -1});
  const int64_t c = sg.conductor();
  auto values = sg.members_below(c);
  auto member = [&](__int128 v) {
    return v >= c || (v >= 0 && sg.contains(static_cast<int64_t>(v)));
  };

  std::cout << "semigroup " << sg.to_string() << ", pattern " << p.to_string() << ", "
            << values.size() << " values per coordinate\n";

  auto t0 = Clock::now();
  auto serial = scan_first_violation_serial(p.coeffs(), values, member);
  double serial_ms = ms_since(t0);

  t0 = Clock::now();
  auto parallel = scan_first_violation_parallel(p.coeffs(), values, member);
  double parallel_ms = ms_since(t0);

  bool agree = serial.has_value() == parallel.has_value() &&
               (!serial || (serial->tuple == parallel->tuple && serial->value == parallel->value));
  std::cout << "first-violation scan: serial " << serial_ms << " ms, parallel " << parallel_ms
            << " ms, speedup " << serial_ms / parallel_ms << "x, "
            << (agree ? "results agree" : "RESULTS DIFFER") << "\n";

  std::vector<char> hit_s(static_cast<size_t>(c), 0), hit_p(static_cast<size_t>(c), 0);
  t0 = Clock::now();
  scan_collect_serial(p.coeffs(), values, c, hit_s);
  double collect_serial_ms = ms_since(t0);

  t0 = Clock::now();
  scan_collect_parallel(p.coeffs(), values, c, hit_p);
  double collect_parallel_ms = ms_since(t0);

  bool collect_agree = hit_s == hit_p;
  std::cout << "collect scan:         serial " << collect_serial_ms << " ms, parallel "
            << collect_parallel_ms << " ms, speedup " << collect_serial_ms / collect_parallel_ms
            << "x, " << (collect_agree ? "results agree" : "RESULTS DIFFER") << "\n";

  return agree && collect_agree ? 0 : 1;
}
