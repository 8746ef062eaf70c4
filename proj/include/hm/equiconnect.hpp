#pragma once

#include "hm/functionals.hpp"

#include <span>
#include <vector>

namespace hm {

// A point of the standard simplex: nonnegative weights with exact sum 1.
class SimplexWeights {
 public:
  explicit SimplexWeights(std::vector<Rational> weights);
  // The j-th vertex of the (n-1)-simplex.
  static SimplexWeights vertex(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

 private:
  std::vector<Rational> weights_;
};

// alpha on [0, t), beta on [t, 1). t = 1 gives alpha, t = 0 gives beta.
StepFunction e1(const StepFunction& alpha, const StepFunction& beta, const Rational& t);

// Iterated equiconnection over the simplex:
//   x_1 = a_1,  x_i = e1(x_{i-1}, a_i, (λ_1+…+λ_{i-1}) / (λ_1+…+λ_i)),  result x_n.
// A vanishing prefix sum makes the ratio 0, so x_i = a_i while all weights so far are zero.
StepFunction e_n(std::span<const StepFunction> points, const SimplexWeights& weights);

// Interleaves alpha and beta on the common refinement of both breakpoint sets and every
// window endpoint in `coords`: alpha on the left half of each cell, beta on the right half.
// Every coordinate in `coords` of the result is the average of the coordinates of alpha and beta.
StepFunction hm_midpoint(const StepFunction& alpha, const StepFunction& beta,
                         std::span<const WindowedFunctional> coords);

// Quantitative uniform continuity of e1 against the pseudometric |phi_(0,1)(·) - phi_(0,1)(·)| < delta.
//
// n is the least integer with 1/n < delta / (2c), c = max |phi|; the grid is a_i = i/n.
// V: every cell average |phi_(a_i,a_{i+1})(α₁) - phi_(a_i,a_{i+1})(α₂)| < delta / (2n²), same for β.
// E: |t₁ - t₂| < 1/(2n).
// When c = 0 the certificate is trivial (n = 1) and every input satisfies the conclusion.
struct ContinuityCertificate {
  TestFunctional functional;
  Rational delta;
  Rational norm;
  long n = 1;
  std::vector<Rational> grid;
  Rational v_threshold;
  Rational e_threshold;
  bool trivial = false;
};

ContinuityCertificate make_certificate(const TestFunctional& phi, const Rational& delta);

struct CertificateCheck {
  bool in_v = false;
  bool in_e = false;
  bool conclusion = false;
  // |phi_(0,1)(e1(α₁,β₁,t₁)) - phi_(0,1)(e1(α₂,β₂,t₂))|.
  Rational gap;
};

CertificateCheck check_certificate(const ContinuityCertificate& cert, const StepFunction& alpha1,
                                   const StepFunction& beta1, const Rational& t1, const StepFunction& alpha2,
                                   const StepFunction& beta2, const Rational& t2);

}  // namespace hm
