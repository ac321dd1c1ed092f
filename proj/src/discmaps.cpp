#include "acplus/discmaps.hpp"

#include <cmath>

namespace acp {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kV0 = 1.0 / (2.0 * std::sqrt(2.0));  // 1/(2 sqrt(q)), q = 2
constexpr double kQ = 2.0;                        // K(1/2)

cplx koebe(cplx z) { return z / ((1.0 - z) * (1.0 - z)); }
cplx koebe_d(cplx z) { return (1.0 + z) / std::pow(1.0 - z, 3); }

// Stable in-disc branch of K^{-1}: 2u/(2u + 1 + sqrt(4u+1)), cut-free off
// (-inf, -1/4].
cplx koebe_inv(cplx u) {
  cplx r = std::sqrt(4.0 * u + 1.0);
  return 2.0 * u / (2.0 * u + 1.0 + r);
}

struct SlitChain {
  cplx v, u, p, w;  // stage values
};

SlitChain slit_chain(cplx z) {
  SlitChain c;
  c.v = kV0 * (1.0 + z) / (1.0 - z);
  c.u = c.v * c.v;
  c.p = (kQ * c.u - 0.25) / (1.0 + c.u);
  c.w = koebe_inv(c.p);
  return c;
}

cplx slit_value(cplx z) { return slit_chain(z).w; }

cplx slit_derivative(cplx z) {
  SlitChain c = slit_chain(z);
  cplx dv = 2.0 * kV0 / ((1.0 - z) * (1.0 - z));
  cplx du = 2.0 * c.v * dv;
  cplx dp = (kQ + 0.25) / ((1.0 + c.u) * (1.0 + c.u)) * du;
  // dKinv/dp = 1/K'(w)
  cplx dw = std::pow(1.0 - c.w, 3) / (1.0 + c.w) * dp;
  return dw;
}

cplx singular_inner(cplx z) { return std::exp((z + 1.0) / (z - 1.0)); }

cplx half_strip(cplx z) {
  cplx u = cplx(0.0, 1.0) * (1.0 + z) / (1.0 - z);  // disc -> upper half-plane
  return cplx(0.0, -2.0 / kPi) * std::asin(u);
}

cplx half_strip_d(cplx z) {
  cplx u = cplx(0.0, 1.0) * (1.0 + z) / (1.0 - z);
  cplx du = cplx(0.0, 2.0) / ((1.0 - z) * (1.0 - z));
  return cplx(0.0, -2.0 / kPi) * du / std::sqrt(1.0 - u * u);
}

cplx log_phase_cayley(cplx z) {
  cplx t = (1.0 + z) / (1.0 - z);  // Re t > 0, principal log applies
  return std::exp(cplx(0.0, 1.0) * std::log(t));
}

cplx log_phase_cayley_d(cplx z) {
  // f'/f = i * (log t)' = 2i / ((1+z)(1-z))
  return log_phase_cayley(z) * cplx(0.0, 2.0) / ((1.0 + z) * (1.0 - z));
}

}  // namespace

cplx DiscMap::value(cplx z) const {
  switch (kind) {
    case DiscMapKind::identity:
      return z;
    case DiscMapKind::koebe:
      return koebe(z);
    case DiscMapKind::singular_inner_plus_one:
      return singular_inner(z) + 1.0;
    case DiscMapKind::half_strip:
      return half_strip(z);
    case DiscMapKind::log_phase_cayley:
      return log_phase_cayley(z);
    case DiscMapKind::slit_disc:
      return slit_value(z);
  }
  return z;
}

cplx DiscMap::derivative(cplx z) const {
  switch (kind) {
    case DiscMapKind::identity:
      return 1.0;
    case DiscMapKind::koebe:
      return koebe_d(z);
    case DiscMapKind::singular_inner_plus_one:
      return singular_inner(z) * (-2.0) / ((z - 1.0) * (z - 1.0));
    case DiscMapKind::half_strip:
      return half_strip_d(z);
    case DiscMapKind::log_phase_cayley:
      return log_phase_cayley_d(z);
    case DiscMapKind::slit_disc:
      return slit_derivative(z);
  }
  return 1.0;
}

const char* DiscMap::name() const {
  switch (kind) {
    case DiscMapKind::identity:
      return "identity";
    case DiscMapKind::koebe:
      return "koebe";
    case DiscMapKind::singular_inner_plus_one:
      return "singular_inner_plus_one";
    case DiscMapKind::half_strip:
      return "half_strip";
    case DiscMapKind::log_phase_cayley:
      return "log_phase_cayley";
    case DiscMapKind::slit_disc:
      return "slit_disc";
  }
  return "identity";
}

std::optional<DiscMap> DiscMap::by_name(const std::string& name) {
  for (auto kind :
       {DiscMapKind::identity, DiscMapKind::koebe,
        DiscMapKind::singular_inner_plus_one, DiscMapKind::half_strip,
        DiscMapKind::log_phase_cayley, DiscMapKind::slit_disc}) {
    DiscMap m{kind};
    if (name == m.name()) return m;
  }
  return std::nullopt;
}

}  // namespace acp
