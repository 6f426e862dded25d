#include "eft/special_fn.hpp"

#include "eft/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace eft {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// cot(pi z), written so that large |Im z| cannot overflow.
cplx cot_pi(cplx z) {
  const double x = 2.0 * kPi * z.real();
  const double y = 2.0 * kPi * z.imag();
  if (std::abs(z.imag()) > 20.0) {
    return {0.0, z.imag() > 0 ? -1.0 : 1.0};
  }
  const double den = std::cosh(y) - std::cos(x);
  return {std::sin(x) / den, -std::sinh(y) / den};
}

// B_2n / (2n) for n = 1..7
constexpr std::array<double, 7> kBernoulliOver2n = {
    1.0 / 12.0,  -1.0 / 120.0,         1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,     1.0 / 12.0,
};

cplx digamma_asymptotic(cplx z) {
  const cplx w = 1.0 / z;
  const cplx w2 = w * w;
  cplx series = kBernoulliOver2n.back();
  for (int n = static_cast<int>(kBernoulliOver2n.size()) - 2; n >= 0; --n) {
    series = series * w2 + kBernoulliOver2n[n];
  }
  return std::log(z) - 0.5 * w - series * w2;
}

} // namespace

cplx digamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("digamma: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("digamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // psi(1 - z) - psi(z) = pi cot(pi z)
    return digamma(1.0 - z) - kPi * cot_pi(z);
  }
  cplx shift = 0.0;
  while (z.real() < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return shift + digamma_asymptotic(z);
}

double digamma_re(ComplexPoint z) {
  return digamma(cplx(z.re, z.im)).real();
}

void QuadratureSpec::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("quadrature tolerance must be > 0");
  if (!(initial_halfwidth >= 10.0)) {
    throw std::invalid_argument("initial half-width must be >= 10");
  }
  if (!(max_halfwidth >= initial_halfwidth)) {
    throw std::invalid_argument("max half-width must be >= initial half-width");
  }
  if (!(panel_width > 0.0)) throw std::invalid_argument("panel width must be > 0");
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod 10/21

namespace {

constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980856675, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

// Gauss weights for kXgk[1], kXgk[3], ..., kXgk[9]
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
  double a, b, value, error;
  double floor;  // roundoff level of `value`
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const std::function<double(double)>& g, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(centre);
  double resk = fc * kWgk[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = g(centre - dx);
    f2[j] = g(centre + dx);
    const double s = f1[j] + f2[j];
    resk += kWgk[j] * s;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * s;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  const double result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double floor = 50.0 * eps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(floor, err);
  return {a, b, result, err, floor};
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& g, double a, double b,
                                    double tolerance, double panel_width,
                                    std::size_t max_panels) {
  QuadratureResult out;
  if (b <= a) return out;
  const auto initial = static_cast<std::size_t>(std::ceil((b - a) / panel_width));
  std::vector<Panel> heap;
  heap.reserve(initial + 16);
  double total = 0.0;
  double err = 0.0;
  double floor = 0.0;
  const double h = (b - a) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + h * static_cast<double>(i);
    const double hi = i + 1 == initial ? b : lo + h;
    Panel p = gk21(g, lo, hi);
    total += p.value;
    err += p.error;
    floor += p.floor;
    heap.push_back(p);
  }
  out.evaluations = 21 * initial;
  std::make_heap(heap.begin(), heap.end());
  // Below the summed roundoff floor further bisection cannot help.
  while (err > tolerance && err > 2.0 * floor) {
    if (heap.size() >= max_panels) {
      throw NonConvergence("adaptive quadrature exceeded its panel budget", err);
    }
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw NonConvergence("adaptive quadrature hit the resolution limit", err);
    }
    const Panel left = gk21(g, worst.a, mid);
    const Panel right = gk21(g, mid, worst.b);
    out.evaluations += 42;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    floor += left.floor + right.floor - worst.floor;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end());
  }
  // re-sum to shed the drift of the running updates
  total = 0.0;
  err = 0.0;
  for (const Panel& p : heap) {
    total += p.value;
    err += p.error;
  }
  out.value = total;
  out.error_estimate = err;
  out.halfwidth = b;
  out.panels = heap.size();
  return out;
}

// ---------------------------------------------------------------------------
// Whole-line integral of an even integrand

namespace {

// Tail constant C with |g(t)| <= C (1 + log t) / t^2, sampled at T, 2T, 4T.
double tail_constant(const std::function<double(double)>& g, double t) {
  double c = 0.0;
  for (double s : {t, 2.0 * t, 4.0 * t}) {
    c = std::max(c, std::abs(g(s)) * s * s / (1.0 + std::log(s)));
  }
  return 2.0 * c;
}

// Integral of C (1 + log t) / t^2 over [T, inf).
double tail_bound(double c, double t) { return c * (2.0 + std::log(t)) / t; }

// Tail of (alpha log t + beta) / t^2 over [T, inf).
double model_tail(double alpha, double beta, double t) {
  return (alpha * (std::log(t) + 1.0) + beta) / t;
}

} // namespace

QuadratureResult integrate_even_decaying_report(const std::function<double(double)>& g,
                                                const QuadratureSpec& spec) {
  spec.validate();
  const double tol = spec.tolerance;

  // Everything below is on the half-line and doubled at the end.
  QuadratureResult out;
  double t = spec.initial_halfwidth;
  double quad_err = 0.0;
  double budget = tol / 8.0;
  auto integrate = [&](double a, double b) {
    const std::size_t left =
        spec.max_panels > out.panels ? spec.max_panels - out.panels : std::size_t{1};
    QuadratureResult r = integrate_adaptive(g, a, b, budget, spec.panel_width, left);
    budget *= 0.5;
    quad_err += r.error_estimate;
    out.panels += r.panels;
    out.evaluations += r.evaluations;
    return r.value;
  };

  double partial = integrate(0.0, t);
  std::vector<double> annuli;  // annuli[j] = integral over [T0 2^j, T0 2^(j+1)]
  std::vector<double> starts;
  double previous = std::numeric_limits<double>::quiet_NaN();
  double last_diff = std::numeric_limits<double>::infinity();

  for (;;) {
    const double c = tail_constant(g, t);
    const double bound = tail_bound(c, t);
    if (2.0 * bound < tol / 2.0) {
      out.value = 2.0 * partial;
      out.tail = 0.0;
      out.error_estimate = 2.0 * (quad_err + bound);
      out.halfwidth = t;
      return out;
    }
    if (annuli.size() >= 2) {
      // Fit (alpha log t + beta) / t^2 to the two most recent annuli:
      //   2 T D(T) = alpha (log T + 1 - log 2) + beta
      const std::size_t j = annuli.size() - 1;
      const double t1 = starts[j - 1], t2 = starts[j];
      const double y1 = 2.0 * t1 * annuli[j - 1], y2 = 2.0 * t2 * annuli[j];
      const double x1 = std::log(t1) + 1.0 - std::numbers::ln2;
      const double x2 = std::log(t2) + 1.0 - std::numbers::ln2;
      const double alpha = (y2 - y1) / (x2 - x1);
      const double beta = y1 - alpha * x1;
      const double tail = model_tail(alpha, beta, t);
      const double estimate = partial + tail;
      if (std::isfinite(previous)) {
        last_diff = std::abs(estimate - previous);
        if (2.0 * last_diff <= tol / 2.0) {
          out.value = 2.0 * estimate;
          out.tail = 2.0 * tail;
          out.error_estimate = 2.0 * (quad_err + last_diff);
          out.halfwidth = t;
          return out;
        }
      }
      previous = estimate;
    }
    if (2.0 * t > spec.max_halfwidth) {
      throw NonConvergence("integrate_even_decaying: tail did not settle below max half-width",
                           2.0 * std::min(last_diff, bound));
    }
    double d = 0.0;
    try {
      d = integrate(t, 2.0 * t);
    } catch (const NonConvergence& e) {
      throw NonConvergence(e.what(), 2.0 * std::min(last_diff, bound) + e.achieved_error());
    }
    starts.push_back(t);
    annuli.push_back(d);
    partial += d;
    t *= 2.0;
  }
}

double integrate_even_decaying(const std::function<double(double)>& g,
                               const QuadratureSpec& spec) {
  return integrate_even_decaying_report(g, spec).value;
}

} // namespace eft
