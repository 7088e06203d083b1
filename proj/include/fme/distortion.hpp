#pragma once

#include "fme/pixel_io.hpp"

#include <array>
#include <compare>
#include <cstdint>

namespace fme
{

/// Original minus prediction for one 4x4 block, row-major.
using Residual4x4 = std::array<int32_t, 16>;
using Coeffs4x4   = std::array<int32_t, 16>;

struct Distortion
{
  uint64_t value = 0;

  Distortion& operator+=( const Distortion& o )
  {
    value += o.value;
    return *this;
  }
  auto operator<=>( const Distortion& ) const = default;
};

/**
  Unnormalized 4x4 Hadamard transform H * R * H^T with

      H = | 1  1  1  1 |
          | 1 -1  1 -1 |
          | 1  1 -1 -1 |
          | 1 -1 -1  1 |

  computed with butterflies: a vertical pass, then a horizontal pass.
*/
Coeffs4x4 hadamard4x4( const Residual4x4& r );

/// (sum |coeff| + 1) >> 1
Distortion satd4x4( const Residual4x4& r );

/// Residual of the 4x4 block at (dx, dy) inside two equally sized views.
Residual4x4 residual4x4( const BlockView& orig, const BlockView& pred, int dx, int dy );

/// Four 4x4 transforms per 8x8 block, the way the cost kernels accumulate it.
Distortion satd8x8( const BlockView& orig, const BlockView& pred );

/// SATD of an arbitrary CU, tiled directly in 4x4 units.
Distortion satd_block( const BlockView& orig, const BlockView& pred );

Distortion sad( const BlockView& orig, const BlockView& pred );

}  // namespace fme
