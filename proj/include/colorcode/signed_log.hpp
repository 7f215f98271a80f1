#ifndef COLORCODE_SIGNED_LOG_HPP
#define COLORCODE_SIGNED_LOG_HPP

#include <cmath>
#include <limits>

namespace colorcode {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// ln(e^a + e^b), robust against -inf arguments.
inline double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double hi = a > b ? a : b, lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// ln(e^a - e^b) for a >= b; returns -inf when the difference vanishes.
inline double log_sub_exp(double a, double b) {
  if (b == kNegInf) return a;
  if (a <= b) return kNegInf;
  return a + std::log1p(-std::exp(b - a));
}

// ln(cosh t), overflow-free.
inline double log_cosh(double t) {
  double u = std::fabs(t);
  return u + std::log1p(std::exp(-2 * u)) - std::log(2.0);
}

}  // namespace colorcode

#endif
