#include "dirosc/quadrature.hpp"

#include <cmath>

namespace dirosc {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double err = left + right - whole;
    if (depth <= 0 || std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double fb = f(b);
    double whole = simpson(fa, fm, fb, b - a);
    return recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace dirosc
