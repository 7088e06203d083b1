#pragma once

// Reference searches used to judge the interpolation-free path. Nothing in the estimation
// datapath depends on this header.

#include "fme/motion_vector.hpp"
#include "fme/pixel_io.hpp"
#include "fme/rate_cost.hpp"

#include <array>

namespace fme
{

enum class InterpKind
{
  Bilinear,
};

/**
  Bilinear quarter-pel interpolation of the w x h block whose integer origin is (ox, oy):

    out = ((4-fx)(4-fy) p00 + fx(4-fy) p10 + (4-fx)fy p01 + fx fy p11 + 8) >> 4

  One extra column (row) is read when fx (fy) is non-zero.
*/
Plane interp_block( const Plane& ref, int ox, int oy, int w, int h, int fx, int fy,
                    InterpKind kind = InterpKind::Bilinear );

/// Prediction of the block at (x, y) displaced by a quarter-pel MV.
Plane predict_block( const Plane& ref, int x, int y, int w, int h, const MotionVector& mv );

struct OracleResult
{
  MotionVector mv;
  RdCost cost;
  Distortion distortion;
};

/// SATD of the interpolated prediction plus the MVD rate against `mvp`.
OracleResult evaluate_mv( const BlockView& orig, const Plane& ref, const MotionVector& mv, LambdaFixed lambda,
                          const MotionVector& mvp );

/// All 49 quarter-pel candidates imv + {-3..3}^2. Ties prefer the smaller offset from imv.
OracleResult exhaustive_quarter_search( const BlockView& orig, const Plane& ref, const MotionVector& imv,
                                        LambdaFixed lambda, const MotionVector& mvp );

/// Half-pel ring around imv, then quarter-pel ring around the half-pel winner.
OracleResult two_step_search( const BlockView& orig, const Plane& ref, const MotionVector& imv, LambdaFixed lambda,
                              const MotionVector& mvp );

using DesignMatrix = std::array<std::array<double, 6>, 9>;

/// Rows [x^2, y^2, xy, x, y, 1] for the nine grid offsets in CostGrid3x3 index order.
DesignMatrix surface_design();

/// Floating-point least squares through the normal equations. Throws on rank deficiency.
std::array<double, 6> lsq_solve( const DesignMatrix& design, const std::array<double, 9>& costs );

}  // namespace fme
