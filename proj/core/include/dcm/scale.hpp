#pragma once

#include <string>
#include <vector>

#include "dcm/pct.hpp"

namespace dcm {

struct Anchor {
  int level = 0;
  double utility = 0.0;
};

struct ValueScale {
  std::vector<double> utilities;    // index k-1 holds u(l_k)
  std::vector<double> coordinates;  // optional numeric level values
  Anchor low;
  Anchor high;
  double alpha = 0.0;               // value of one card unit

  int levels() const { return static_cast<int>(utilities.size()); }
  double at(int level) const;
};

ValueScale build_interval_scale(const PairwiseTable& tbl, int p, int q, double u_p, double u_q);
ValueScale build_interval_scale(const ContinuousTable& tbl, int p, int q, double u_p, double u_q);

// Piecewise-linear utility between adjacent level coordinates.
double interpolate(const ValueScale& scale, double x);

struct RatioWeights {
  std::vector<Cards> cards;     // between consecutive classes, worst to best
  std::vector<double> weights;  // w(r_h) per class
  double base = 1.0;            // w(r_1)
  double ratio = 1.0;           // z
  double unit = 0.0;            // alpha
};

RatioWeights build_ratio_weights(std::size_t class_count, const std::vector<Cards>& cards,
                                 double base, double ratio);

}  // namespace dcm
