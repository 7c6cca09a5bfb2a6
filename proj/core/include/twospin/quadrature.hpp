// quadrature.hpp: adaptive Gauss-Kronrod (7/15) integration over fixed-width base panels

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace twospin::quad {

struct Options {
    double abs_tol = 1e-10;        // for the whole interval
    double max_panel_width = 0.05; // initial panels are no wider than this
    int max_depth = 30;            // bisections allowed below a base panel
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;  // sum of |K15 - G7| over accepted panels
    std::size_t panels = 0;       // accepted panels
    std::size_t unconverged = 0;  // panels accepted at max_depth without meeting tolerance
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, const Result& partial) : std::runtime_error(what), partial_(partial) {}
    const Result& partial() const noexcept { return partial_; }

private:
    Result partial_;
};

namespace detail {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss
// weights pair with the odd-indexed Kronrod abscissae.
inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod;
    double gauss;
    double abs_sum;  // Kronrod estimate of the integral of |f|
};

template <class F>
PanelEstimate gk15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double k = fc * kWgk[7];
    double g = fc * kWg[3];
    double abs_sum = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        k += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) g += kWg[j / 2] * (f1 + f2);
    }
    return {k * half, g * half, abs_sum * std::abs(half)};
}

template <class F>
void refine(F& f, double a, double b, double tol, int depth, const Options& opt, Result& out) {
    const PanelEstimate est = gk15(f, a, b);
    const double err = std::abs(est.kronrod - est.gauss);
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * est.abs_sum;
    if (!std::isfinite(est.kronrod)) {
        ++out.unconverged;
        out.value += est.kronrod;
        return;
    }
    if (err <= std::max(tol, roundoff) || depth >= opt.max_depth) {
        if (err > std::max(tol, roundoff)) ++out.unconverged;
        out.value += est.kronrod;
        out.error_estimate += err;
        ++out.panels;
        return;
    }
    const double mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * tol, depth + 1, opt, out);
    refine(f, mid, b, 0.5 * tol, depth + 1, opt, out);
}

}  // namespace detail

// Integral of f over [a, b]. Throws QuadratureError if any panel fails to
// converge within max_depth bisections or the integrand is not finite.
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
    if (!(b > a)) return {};
    if (!(opt.abs_tol > 0.0) || !(opt.max_panel_width > 0.0))
        throw std::invalid_argument("quad::integrate: tolerance and panel width must be positive");
    const double length = b - a;
    const auto base = static_cast<std::size_t>(std::ceil(length / opt.max_panel_width));
    const double width = length / static_cast<double>(base);
    const double panel_tol = opt.abs_tol / static_cast<double>(base);
    Result out;
    for (std::size_t i = 0; i < base; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == base) ? b : lo + width;
        detail::refine(f, lo, hi, panel_tol, 0, opt, out);
    }
    if (out.unconverged > 0 || !std::isfinite(out.value)) {
        throw QuadratureError("quad::integrate: " + std::to_string(out.unconverged) + " of " +
                                  std::to_string(out.panels) + " panels did not converge (value " +
                                  std::to_string(out.value) + ", error estimate " +
                                  std::to_string(out.error_estimate) + ")",
                              out);
    }
    return out;
}

}  // namespace twospin::quad
