#include "acplus/complexutil.hpp"

#include <cstdio>
#include <cstdlib>

namespace acp {

namespace {

// Consumes one signed float starting at pos; returns nullopt on failure.
std::optional<double> eat_number(const std::string& s, size_t& pos) {
  if (pos >= s.size()) return std::nullopt;
  const char* start = s.c_str() + pos;
  char* end = nullptr;
  double v = std::strtod(start, &end);
  if (end == start) return std::nullopt;
  pos += static_cast<size_t>(end - start);
  return v;
}

}  // namespace

std::optional<cplx> parse_complex(const std::string& text) {
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c))) return std::nullopt;

  size_t pos = 0;
  // Bare "i", "+i", "-i".
  auto bare_i = [&](size_t p) -> std::optional<double> {
    size_t q = p;
    double sign = 1.0;
    if (q < text.size() && (text[q] == '+' || text[q] == '-')) {
      if (text[q] == '-') sign = -1.0;
      ++q;
    }
    if (q + 1 == text.size() && text[q] == 'i') return sign;
    return std::nullopt;
  };

  if (auto im = bare_i(0)) return cplx(0.0, *im);

  auto first = eat_number(text, pos);
  if (!first) return std::nullopt;

  if (pos == text.size()) return cplx(*first, 0.0);
  if (pos + 1 == text.size() && text[pos] == 'i') return cplx(0.0, *first);

  // Remaining part must be a signed imaginary component.
  if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
  if (auto im = bare_i(pos)) return cplx(*first, *im);
  size_t pos2 = pos;
  auto second = eat_number(text, pos2);
  if (!second) return std::nullopt;
  if (pos2 + 1 != text.size() || text[pos2] != 'i') return std::nullopt;
  return cplx(*first, *second);
}

std::string format_complex(cplx z) {
  char buf[80];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace acp
