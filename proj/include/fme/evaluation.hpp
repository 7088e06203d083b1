#pragma once

#include "fme/motion_vector.hpp"
#include "fme/pixel_io.hpp"
#include "fme/rate_cost.hpp"
#include "fme/schedule.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fme
{

/// Agreement of one search method with the exhaustive quarter-pel optimum.
struct MethodMetrics
{
  uint64_t count       = 0;
  uint64_t hits        = 0;  // same MV as the exhaustive winner
  uint64_t near_hits   = 0;  // Chebyshev distance <= 1 quarter
  uint64_t truth_hits  = 0;  // same MV as the known true displacement, when one is given
  double excess_sum    = 0.0;

  void add( const MotionVector& mv, const MotionVector& best_mv, RdCost cost, RdCost best_cost,
            const std::optional<MotionVector>& truth );
  void merge( const MethodMetrics& o );

  double hit_rate() const;
  double near_hit_rate() const;
  double truth_hit_rate() const;
  double mean_relative_excess() const;
};

struct EvaluationSummary
{
  MethodMetrics surface;
  MethodMetrics two_step;
  MethodMetrics exhaustive;  // hits == count by definition; truth_hits is the interesting field
  bool has_truth = false;

  void merge( const EvaluationSummary& o );
};

/**
  Re-scores every CU of a CTU pass with the interpolating baselines. The surface path's MV is
  charged the SATD of its bilinear prediction so all three methods share one cost scale. `truth`
  is the known quarter-pel displacement of synthetic content.
*/
EvaluationSummary evaluate_pass( const Plane& orig, const Plane& ref, const CtuPass& pass, LambdaFixed lambda,
                                 const std::optional<MotionVector>& truth = std::nullopt );

}  // namespace fme
