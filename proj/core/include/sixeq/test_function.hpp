#ifndef SIXEQ_TEST_FUNCTION_HPP
#define SIXEQ_TEST_FUNCTION_HPP

#include <functional>
#include <string>
#include <vector>

namespace sixeq {

/// Smooth space-time weight psi(x, t) paired with its two first derivatives.
/// Periodic in x on the unit circle; vanishes identically at and beyond
/// t = t_end so that only the t = 0 boundary term survives integration by
/// parts in time.
struct TestFunction {
  std::string description;
  double t_end = 0.0;
  std::function<double(double, double)> value;
  std::function<double(double, double)> dt;
  std::function<double(double, double)> dx;
};

/// a*psi1 + b*psi2 (both must share t_end).
TestFunction linear_combination(double a, const TestFunction& psi1, double b,
                                const TestFunction& psi2);

/// The default family: low-order trigonometric modes in x times two smooth
/// windows in t (one equal to 1 at t = 0, one vanishing at both ends), 12
/// functions in total.
std::vector<TestFunction> default_test_functions(double t_end);

}  // namespace sixeq

#endif  // SIXEQ_TEST_FUNCTION_HPP
