#include "hm/equiconnect.hpp"

#include <algorithm>
#include <set>

namespace hm {

SimplexWeights::SimplexWeights(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InputError("simplex weights must be nonempty");
  Rational total = 0;
  for (const auto& w : weights_) {
    if (w < 0) throw InputError("simplex weight " + format_rational(w) + " is negative");
    total += w;
  }
  if (total != 1) throw InputError("simplex weights sum to " + format_rational(total) + ", not 1");
}

SimplexWeights SimplexWeights::vertex(std::size_t n, std::size_t j) {
  std::vector<Rational> w(n, Rational(0));
  w.at(j) = 1;
  return SimplexWeights(std::move(w));
}

StepFunction e1(const StepFunction& alpha, const StepFunction& beta, const Rational& t) {
  require_same_space(alpha.space(), beta.space(), "e1");
  if (t < 0 || t > 1) throw InputError("e1 parameter " + format_rational(t) + " outside [0,1]");
  std::vector<Rational> bps{Rational(0)};
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i < alpha.piece_count() && alpha.piece_begin(i) < t; ++i) {
    values.push_back(alpha.values()[i]);
    bps.push_back(std::min(alpha.piece_end(i), t));
  }
  for (std::size_t i = 0; i < beta.piece_count(); ++i) {
    if (beta.piece_end(i) <= t) continue;
    values.push_back(beta.values()[i]);
    bps.push_back(beta.piece_end(i));
  }
  return StepFunction::from_pieces(alpha.space(), std::move(bps), std::move(values));
}

StepFunction e_n(std::span<const StepFunction> points, const SimplexWeights& weights) {
  if (points.empty()) throw InputError("e_n needs at least one point");
  if (points.size() != weights.size())
    throw InputError("e_n got " + std::to_string(points.size()) + " points and " +
                     std::to_string(weights.size()) + " weights");
  for (const auto& p : points) require_same_space(points.front().space(), p.space(), "e_n");
  StepFunction x = points[0];
  Rational prefix = weights[0];
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Rational previous = prefix;
    prefix += weights[i];
    const Rational ratio = prefix == 0 ? Rational(0) : Rational(previous / prefix);
    x = e1(x, points[i], ratio);
  }
  return x;
}

StepFunction hm_midpoint(const StepFunction& alpha, const StepFunction& beta,
                         std::span<const WindowedFunctional> coords) {
  require_same_space(alpha.space(), beta.space(), "hm_midpoint");
  if (coords.empty()) throw InputError("hm_midpoint needs a nonempty coordinate family");
  std::set<Rational> cuts(alpha.breakpoints().begin(), alpha.breakpoints().end());
  cuts.insert(beta.breakpoints().begin(), beta.breakpoints().end());
  for (const auto& wf : coords) {
    require_same_space(alpha.space(), wf.functional.space(), "hm_midpoint");
    cuts.insert(wf.window.a());
    cuts.insert(wf.window.b());
  }
  const std::vector<Rational> cells(cuts.begin(), cuts.end());
  std::vector<Rational> bps{Rational(0)};
  std::vector<std::size_t> values;
  for (std::size_t l = 0; l + 1 < cells.size(); ++l) {
    const Rational mid = (cells[l] + cells[l + 1]) / 2;
    values.push_back(evaluate(alpha, cells[l]));
    bps.push_back(mid);
    values.push_back(evaluate(beta, cells[l]));
    bps.push_back(cells[l + 1]);
  }
  return StepFunction::from_pieces(alpha.space(), std::move(bps), std::move(values));
}

ContinuityCertificate make_certificate(const TestFunctional& phi, const Rational& delta) {
  if (delta <= 0) throw InputError("certificate radius must be positive");
  ContinuityCertificate cert{phi, delta, functional_norm(phi), 1, {}, 0, 0, false};
  if (cert.norm == 0) {
    cert.trivial = true;
    cert.n = 1;
  } else {
    // least n with 1/n < delta/(2c), i.e. n > 2c/delta
    const Rational bound = 2 * cert.norm / delta;
    mpz_class floor_bound;
    mpz_fdiv_q(floor_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    if (!floor_bound.fits_slong_p()) throw InputError("certificate grid too fine");
    cert.n = floor_bound.get_si() + 1;
  }
  for (long i = 0; i <= cert.n; ++i) cert.grid.push_back(ratio(i, cert.n));
  cert.v_threshold = delta / (2 * Rational(cert.n) * Rational(cert.n));
  cert.e_threshold = ratio(1, 2 * cert.n);
  return cert;
}

CertificateCheck check_certificate(const ContinuityCertificate& cert, const StepFunction& alpha1,
                                   const StepFunction& beta1, const Rational& t1, const StepFunction& alpha2,
                                   const StepFunction& beta2, const Rational& t2) {
  const auto& space = cert.functional.space();
  for (const auto* f : {&alpha1, &beta1, &alpha2, &beta2}) require_same_space(space, f->space(), "check_certificate");

  auto cells_close = [&](const StepFunction& f, const StepFunction& g) {
    for (long i = 0; i < cert.n; ++i) {
      const WindowedFunctional cell{cert.functional, Window(cert.grid[i], cert.grid[i + 1])};
      if (!(abs_value(window_average(cell, f) - window_average(cell, g)) < cert.v_threshold)) return false;
    }
    return true;
  };

  CertificateCheck check;
  check.in_v = cells_close(alpha1, alpha2) && cells_close(beta1, beta2);
  check.in_e = abs_value(t1 - t2) < cert.e_threshold;
  const WindowedFunctional whole{cert.functional, Window(0, 1)};
  check.gap = abs_value(window_average(whole, e1(alpha1, beta1, t1)) - window_average(whole, e1(alpha2, beta2, t2)));
  check.conclusion = check.gap < cert.delta;
  return check;
}

}  // namespace hm
