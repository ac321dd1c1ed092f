#pragma once
// Named holomorphic maps on the unit disc, with closed-form derivatives.
// These are the `g` evaluators that periodic/composite symbols and the
// spirallike Koenigs construction are built from.
//
//   identity            z
//   koebe               z/(1-z)^2             (disc onto C minus (-inf,-1/4])
//   singular_inner_p1   exp((z+1)/(z-1)) + 1  (bounded, essential boundary
//                                              singularity at z = 1)
//   half_strip          -(2i/pi) asin(i(1+z)/(1-z))
//                       (disc onto {Re > 0, |Im| < 1}, z=1 -> infinity; the
//                        asin form keeps the image inside the right
//                        half-plane, unlike the full-strip log form)
//   log_phase_cayley    exp(i Log((1+z)/(1-z)))  (into the annulus
//                        e^{-pi/2} < |w| < e^{pi/2}; Arg of the Cayley image
//                        lies in (-pi/2, pi/2) so the principal Log applies)
//   slit_disc           Riemann map of the disc onto D \ [1/2, 1) with
//                       F(0)=0, F'(0)>0, as the elementary chain
//                         v  = (1/(2 sqrt 2)) (1+z)/(1-z)      D -> C_+
//                         u  = v^2                             C_+ -> C\(-inf,0]
//                         p  = (2u - 1/4)/(1+u)                Moebius
//                         F  = Kinv(p) = 2p/(2p+1+sqrt(4p+1))  inverse Koebe
//                       (q = K(1/2) = 2 fixes the Moebius; the chain inverts
//                       Koebe's map of the slit disc onto a doubly slit plane)

#include <optional>
#include <string>

#include "acplus/complexutil.hpp"

namespace acp {

enum class DiscMapKind {
  identity,
  koebe,
  singular_inner_plus_one,
  half_strip,
  log_phase_cayley,
  slit_disc,
};

struct DiscMap {
  DiscMapKind kind = DiscMapKind::identity;

  cplx value(cplx z) const;
  cplx derivative(cplx z) const;
  const char* name() const;

  static std::optional<DiscMap> by_name(const std::string& name);
};

}  // namespace acp
