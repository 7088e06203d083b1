#pragma once

#include "fme/distortion.hpp"
#include "fme/motion_vector.hpp"

#include <array>
#include <compare>
#include <cstdint>

namespace fme
{

/// Lagrange multiplier in Q16 fixed point.
struct LambdaFixed
{
  uint64_t q16 = 0;

  /// round(0.57 * 2^((qp - 12) / 3) * 2^16)
  static LambdaFixed from_qp( int qp );
  static LambdaFixed from_double( double lambda );

  double to_double() const { return static_cast<double>( q16 ) / 65536.0; }
};

struct RdCost
{
  uint64_t value = 0;

  auto operator<=>( const RdCost& ) const = default;
};

constexpr int kMaxMvdComponent = ( 1 << 15 ) - 1;

/// Order-0 exp-Golomb code length of one signed MVD component (v <= 0 -> -2v, v > 0 -> 2v - 1).
int mvd_component_bits( int v );

/// Same value through the precomputed table; valid for |v| <= 255.
int mvd_component_bits_lut( int v );

int mvd_bits( const MotionVector& mvd );

/// J = D + ((lambda_q16 * bits + 2^15) >> 16). Throws on 64-bit overflow.
RdCost rd_cost( Distortion d, const MotionVector& mvd, LambdaFixed lambda );

}  // namespace fme
