#pragma once
// Semigroup descriptors: small JSON documents that name a generator or
// Koenigs construction plus its parameters.  Shared by the CLI (--generator
// files) and the preset registry.
//
//   {"builtin": "hprime-1plus2s"}          h'(s) = 1 + 2^{-s}
//   {"builtin": "hprime-1over-1minus2s"}   h'(s) = 1/(1 - 2^{-s})
//   {"builtin": "koebe-spirallike"}        spirallike f = koebe, c = 1, k = 2
//   {"builtin": "slit-spirallike"}         spirallike f = slit_disc, c = 1, k = 2
//   {"type": "h_prime_series", "series": {...}}    h' an exact polynomial
//   {"type": "generator_series", "series": {...}}  H  an exact polynomial
//   {"type": "spirallike", "map": "<disc map>", "c": [re, im], "base": k}

#include "acplus/json_io.hpp"
#include "acplus/semigroup.hpp"

namespace acp {

// True when the descriptor carries a closed-form Koenigs map (spirallike
// forms); false when h must be recovered by path integration.
bool descriptor_is_spirallike(const jsonio::json& j);

GeneratorSpec generator_from_descriptor(const jsonio::json& j,
                                        const RegionSpec& region);

KoenigsSpec koenigs_from_descriptor(const jsonio::json& j,
                                    const RegionSpec& region,
                                    double quad_tol = 1e-12);

}  // namespace acp
