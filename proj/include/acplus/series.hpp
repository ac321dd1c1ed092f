#pragma once
// Truncated Dirichlet series  f(s) = sum_{n <= N} a_n n^{-s}.
//
// Storage is sparse (ordered index -> coefficient) so that products of a few
// monomials at large indices stay cheap.  A series carries its truncation
// index N and a tail tag: either it is an exact Dirichlet polynomial, or the
// indices above N were discarded and |tail(s)| <= majorant holds for all
// Re s >= valid_from.  Arithmetic propagates truncation by the min rule and
// keeps the tail bookkeeping sound (every dropped coefficient mass is folded
// into the majorant).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "acplus/complexutil.hpp"

namespace acp {

using index_t = std::int64_t;

enum class TailKind { exact_polynomial, truncated_with_bound };

struct TailInfo {
  TailKind kind = TailKind::exact_polynomial;
  double majorant = 0.0;    // bound on |sum_{n > N} a_n n^{-s}|
  double valid_from = 0.0;  // ...valid for Re s >= valid_from
};

struct EvaluationResult {
  cplx value;
  std::optional<double> tail_bound;  // present iff truncated and Re s >= valid_from
};

class Series {
 public:
  Series() = default;
  // Coefficients with |a_n| == 0 are dropped; indices must satisfy 1<=n<=N.
  Series(std::map<index_t, cplx> coeffs, index_t truncation,
         TailInfo tail = TailInfo{});

  static Series zero(index_t truncation = 1);
  static Series constant(cplx a, index_t truncation = 1);
  static Series monomial(index_t n, cplx a);  // a * n^{-s}

  const std::map<index_t, cplx>& coeffs() const { return coeffs_; }
  index_t truncation() const { return truncation_; }
  const TailInfo& tail() const { return tail_; }
  bool exact() const { return tail_.kind == TailKind::exact_polynomial; }

  cplx coefficient(index_t n) const;
  cplx a1() const { return coefficient(1); }
  std::size_t support_size() const { return coeffs_.size(); }
  // l1 mass of stored coefficients, optionally excluding the constant term.
  double l1_norm(bool include_constant = true) const;
  // sum |a_n| * ln n  (derivative majorant on Re s >= 0).
  double derivative_l1() const;

  // Compensated-summation evaluation in ascending index order.
  EvaluationResult evaluate(cplx s) const;

  Series& scale(cplx factor);
  // Index dilation n -> n*m (used by monomial pullbacks); indices pushed past
  // the cap are folded into the tail majorant.
  Series dilate(index_t m, index_t cap) const;
  // Coefficient twist a_n -> a_n * n^{-h} (vertical translation s -> s + h).
  Series translate(double h) const;

  friend Series add(const Series& f, const Series& g);
  friend Series multiply(const Series& f, const Series& g, bool product_closure);
  friend Series exp_series(const Series& f, index_t closure);

 private:
  std::map<index_t, cplx> coeffs_;
  index_t truncation_ = 1;
  TailInfo tail_;
};

Series add(const Series& f, const Series& g);
// product_closure: when both inputs are exact polynomials, keep all indices up
// to N_f*N_g instead of min(N_f, N_g).
Series multiply(const Series& f, const Series& g, bool product_closure = false);
// exp of a series with zero constant term; exact up to `closure` because index
// products grow geometrically (the j-th power only reaches indices >= 2^j).
// closure <= 0 means "use f.truncation()".
Series exp_series(const Series& f, index_t closure = 0);

// Deterministic sup |f| over the vertical segment Re s = sigma,
// |Im s| <= t_window, sampled with the given step (incremental phase rotors,
// renormalized periodically).
double sup_norm_estimate(const Series& f, double sigma, double t_window,
                         double grid_step);

}  // namespace acp
