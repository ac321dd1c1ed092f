#pragma once
// Small shared numeric helpers: compensated (Kahan) accumulation for complex
// sums, and the "a+bi" literal format used by the CLI and JSON reports.

#include <cmath>
#include <complex>
#include <optional>
#include <string>

namespace acp {

using cplx = std::complex<double>;

// Kahan compensated accumulator, applied per component so that long
// coefficient sums are reproducible and carry ~1 ulp error growth.
struct KahanSum {
  double hi = 0.0, lo = 0.0;
  void add(double x) {
    double y = x - lo;
    double t = hi + y;
    lo = (t - hi) - y;
    hi = t;
  }
  double value() const { return hi; }
};

struct KahanSumC {
  KahanSum re, im;
  void add(cplx z) {
    re.add(z.real());
    im.add(z.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

// Parses complex literals of the forms "1.5", "-2e-3+0.25i", "3i", "i", "-i",
// "2-i".  Whitespace is not allowed.  Returns nullopt on malformed input.
std::optional<cplx> parse_complex(const std::string& text);

// Formats with up to 17 significant digits (round-trip safe), "a+bi" shape.
std::string format_complex(cplx z);

}  // namespace acp
