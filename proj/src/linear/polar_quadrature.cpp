#include "bsq/polar_quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bsq/errors.hpp"
#include "bsq/propagator.hpp"

namespace bsq {
namespace {

constexpr double kPi = std::numbers::pi;

struct Rule {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

template <int N>
Rule make_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  Rule r;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0.0) continue;
    r.x.push_back(-a[i]);
    r.w.push_back(w[i]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.x.push_back(a[i]);
    r.w.push_back(w[i]);
  }
  return r;
}

const Rule& rule(int n) {
  static const Rule r4 = make_rule<4>();
  static const Rule r8 = make_rule<8>();
  static const Rule r16 = make_rule<16>();
  static const Rule r32 = make_rule<32>();
  switch (n) {
    case 4: return r4;
    case 8: return r8;
    case 16: return r16;
    case 32: return r32;
    default: throw RangeError("supported Gauss-Legendre orders are 4, 8, 16 and 32");
  }
}

void append_panels(std::vector<PolarQuadGrid::Panel>& out, const std::vector<double>& edges) {
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) out.push_back({edges[i], edges[i + 1]});
}

// Exponent q of rho in the radial weight rho^q for large rho.
double radial_growth(const NormDescriptor& norm) {
  return 2.0 * norm.r + (norm.deriv == DerivWeight::none ? 0.0 : 2.0) + 1.0;
}

}  // namespace

std::string NormDescriptor::label() const {
  std::ostringstream s;
  s << 'H' << r << '_';
  if (deriv == DerivWeight::dx) s << "dx_";
  if (deriv == DerivWeight::dy) s << "dy_";
  s << (component == Component::b ? "b" : "Omega");
  return s.str();
}

PolarQuadGrid PolarQuadGrid::build(const PhysParams& params, double t_max, const std::vector<AnalyticProfile>& profiles,
                                   const NormDescriptor& norm, int order) {
  params.validate();
  if (!(t_max >= 0.0)) throw DomainError("t_max must be >= 0");
  rule(order);
  rule(order / 2);
  PolarQuadGrid g;
  g.order_ = order;

  // Angular panels: a central panel of half-width h around each critical angle,
  // then geometrically growing panels out to the midpoints 0, pi, 2pi.
  const double n2 = params.bruntN * params.bruntN;
  const double rate = params.alpha > 0.0 ? std::max(n2 / (params.alpha * params.alpha), n2 / params.alpha) : n2;
  double h = kPi / 8.0;
  if (t_max * rate > 0.0) h = std::min(h, kPi / (4.0 * std::sqrt(t_max * rate)));
  g.critical_width_ = 2.0 * h;
  for (double centre : {0.5 * kPi, 1.5 * kPi}) {
    std::vector<double> edges{centre - 0.5 * kPi, centre + 0.5 * kPi, centre - h, centre + h};
    for (double d = 2.0 * h; d < 0.5 * kPi * 0.75; d *= 2.0) {
      edges.push_back(centre - d);
      edges.push_back(centre + d);
    }
    std::sort(edges.begin(), edges.end());
    append_panels(g.angular_, edges);
  }

  // Radial panels.
  const double q = radial_growth(norm);
  bool algebraic = false;
  double r_max = 0.0;
  double scale = 1.0;
  for (const auto& p : profiles) {
    p.validate();
    if (p.amplitude == 0.0) continue;
    if (p.super_algebraic()) {
      r_max = std::max(r_max, p.truncation_radius(q, 1e-7));
      scale = std::min(scale, p.width);
    } else {
      algebraic = true;
      if (!(q - 2.0 * p.power < -1.0)) {
        std::ostringstream msg;
        msg << "norm " << norm.label() << " of an algebraic profile with power " << p.power << " diverges";
        throw AccuracyError(msg.str());
      }
    }
  }
  if (algebraic) {
    g.tail_start_ = std::max(r_max, 8.0);
    r_max = g.tail_start_;
  }
  if (r_max <= 0.0) r_max = 1.0;
  const int n_panels = std::max(4, static_cast<int>(std::ceil(r_max / (0.5 * scale))));
  std::vector<double> edges;
  for (int i = 0; i <= n_panels; ++i) edges.push_back(r_max * i / n_panels);
  append_panels(g.radial_, edges);
  return g;
}

PolarQuadGrid::Nodes PolarQuadGrid::angular_nodes(int n) const {
  const Rule& r = rule(n);
  Nodes out;
  for (const auto& p : angular_) {
    const double mid = 0.5 * (p.lo + p.hi), half = 0.5 * (p.hi - p.lo);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      out.x.push_back(mid + half * r.x[i]);
      out.w.push_back(half * r.w[i]);
    }
  }
  return out;
}

PolarQuadGrid::Nodes PolarQuadGrid::radial_nodes(int n) const {
  const Rule& r = rule(n);
  Nodes out;
  for (const auto& p : radial_) {
    const double mid = 0.5 * (p.lo + p.hi), half = 0.5 * (p.hi - p.lo);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      out.x.push_back(mid + half * r.x[i]);
      out.w.push_back(half * r.w[i]);
    }
  }
  if (tail_start_ > 0.0) {
    // rho = R / u on u in (0, 1], graded geometrically toward u = 0.
    std::vector<double> edges{0.0};
    for (int j = 30; j >= 0; --j) edges.push_back(std::ldexp(1.0, -j));
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
      const double mid = 0.5 * (edges[e] + edges[e + 1]), half = 0.5 * (edges[e + 1] - edges[e]);
      for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double u = mid + half * r.x[i];
        out.x.push_back(tail_start_ / u);
        out.w.push_back(half * r.w[i] * tail_start_ / (u * u));
      }
    }
  }
  return out;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

double integrate(const AnalyticProfile& b0, const AnalyticProfile& Omega0, const PhysParams& params, double t,
                 const NormDescriptor& norm, const PolarQuadGrid& grid, int n) {
  const auto ang = grid.angular_nodes(n);
  const auto rad = grid.radial_nodes(n);
  std::vector<double> b_r(rad.x.size()), o_r(rad.x.size()), w_r(rad.x.size());
  for (std::size_t j = 0; j < rad.x.size(); ++j) {
    const double rho = rad.x[j];
    b_r[j] = b0.radial(rho);
    o_r[j] = Omega0.radial(rho);
    double w = rad.w[j] * rho;
    if (norm.r != 0.0) w *= std::pow(1.0 + rho * rho, norm.r);
    if (norm.deriv != DerivWeight::none) w *= rho * rho;
    w_r[j] = w;
  }
  std::vector<double> per_angle(ang.x.size());
  std::vector<double> terms(rad.x.size());
  for (std::size_t i = 0; i < ang.x.size(); ++i) {
    const double theta = ang.x[i];
    const double c = std::cos(theta), s = std::sin(theta);
    const Mat2 g = exact_mode_propagator(params, std::clamp(c, -1.0, 1.0), t);
    const cplx g1 = norm.component == Component::b ? g.a11 : g.a21;
    const cplx g2 = norm.component == Component::b ? g.a12 : g.a22;
    double angular = 1.0;
    if (norm.deriv == DerivWeight::dx) angular = c * c;
    if (norm.deriv == DerivWeight::dy) angular = s * s;
    for (std::size_t j = 0; j < rad.x.size(); ++j) terms[j] = w_r[j] * std::norm(g1 * b_r[j] + g2 * o_r[j]);
    per_angle[i] = ang.w[i] * angular * pairwise_sum(terms);
  }
  return pairwise_sum(per_angle);
}

}  // namespace

double linear_norm_quadrature(const AnalyticProfile& b0, const AnalyticProfile& Omega0, const PhysParams& params,
                              double t, const NormDescriptor& norm, const PolarQuadGrid& grid) {
  if (!(t >= 0.0)) throw DomainError("time must be >= 0");
  const double fine = integrate(b0, Omega0, params, t, norm, grid, grid.order());
  const double coarse = integrate(b0, Omega0, params, t, norm, grid, grid.order() / 2);
  if (fine == 0.0 && coarse == 0.0) return 0.0;
  const double rel = std::abs(fine - coarse) / std::abs(fine);
  if (!(rel <= 0.01)) {
    std::ostringstream msg;
    msg << "quadrature for " << norm.label() << " at t=" << t << " unresolved (refinement estimate " << rel << ")";
    throw AccuracyError(msg.str());
  }
  return std::sqrt(fine);
}

}  // namespace bsq
