#pragma once

// Test-only generators and brute-force references.

#include "fme/distortion.hpp"
#include "fme/pixel_io.hpp"
#include "fme/surface.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace fme::test
{

inline Plane random_plane( int w, int h, std::mt19937_64& rng, int margin = 0 )
{
  std::uniform_int_distribution<int> dist( 0, 255 );
  Plane p( w, h, margin );
  for( int y = -margin; y < h + margin; y++ )
    for( int x = -margin; x < w + margin; x++ )
      p.at( x, y ) = static_cast<Pel>( dist( rng ) );
  return p;
}

/// Noise smoothed by a 5x5 box filter: natural-looking texture with a unique integer-pel match.
inline Plane smooth_canvas( int w, int h, std::mt19937_64& rng )
{
  const Plane noise = random_plane( w + 4, h + 4, rng );
  Plane p( w, h );
  for( int y = 0; y < h; y++ )
  {
    for( int x = 0; x < w; x++ )
    {
      int s = 0;
      for( int j = 0; j < 5; j++ )
        for( int i = 0; i < 5; i++ )
          s += noise.at( x + i, y + j );
      p.at( x, y ) = static_cast<Pel>( ( s + 12 ) / 25 );
    }
  }
  return p;
}

/// w x h window of `canvas` at (x, y), carrying `margin` samples of real canvas content per side.
inline Plane crop( const Plane& canvas, int x, int y, int w, int h, int margin = 0 )
{
  Plane p( w, h, margin );
  for( int j = -margin; j < h + margin; j++ )
    for( int i = -margin; i < w + margin; i++ )
      p.at( i, j ) = canvas.at( x + i, y + j );
  return p;
}

/// Direct H * R * H^T with explicit matrices.
inline Coeffs4x4 naive_hadamard( const Residual4x4& r )
{
  static constexpr int H[4][4] = { { 1, 1, 1, 1 }, { 1, -1, 1, -1 }, { 1, 1, -1, -1 }, { 1, -1, -1, 1 } };
  int32_t hr[4][4] = {};
  for( int i = 0; i < 4; i++ )
    for( int j = 0; j < 4; j++ )
      for( int k = 0; k < 4; k++ )
        hr[i][j] += H[i][k] * r[k * 4 + j];
  Coeffs4x4 out{};
  for( int i = 0; i < 4; i++ )
    for( int j = 0; j < 4; j++ )
      for( int k = 0; k < 4; k++ )
        out[i * 4 + j] += hr[i][k] * H[j][k];
  return out;
}

/// Transform, absolute sum, halve with rounding.
inline uint64_t naive_satd4x4( const Residual4x4& r )
{
  uint64_t s = 0;
  for( int32_t c : naive_hadamard( r ) )
    s += static_cast<uint64_t>( std::abs( c ) );
  return ( s + 1 ) / 2;
}

inline Residual4x4 random_residual( std::mt19937_64& rng )
{
  std::uniform_int_distribution<int32_t> dist( -255, 255 );
  Residual4x4 r;
  for( auto& v : r )
    v = dist( rng );
  return r;
}

inline CostGrid3x3 random_grid( std::mt19937_64& rng, int64_t max_cost = int64_t{ 1 } << 20 )
{
  std::uniform_int_distribution<int64_t> dist( 0, max_cost );
  CostGrid3x3 g;
  for( auto& c : g.costs )
    c = dist( rng );
  return g;
}

inline CostGrid3x3 mirror_x( const CostGrid3x3& g )
{
  CostGrid3x3 out;
  for( int y = -1; y <= 1; y++ )
    for( int x = -1; x <= 1; x++ )
      out.at( x, y ) = g.at( -x, y );
  return out;
}

inline CostGrid3x3 mirror_y( const CostGrid3x3& g )
{
  CostGrid3x3 out;
  for( int y = -1; y <= 1; y++ )
    for( int x = -1; x <= 1; x++ )
      out.at( x, y ) = g.at( x, -y );
  return out;
}

inline CostGrid3x3 transpose( const CostGrid3x3& g )
{
  CostGrid3x3 out;
  for( int y = -1; y <= 1; y++ )
    for( int x = -1; x <= 1; x++ )
      out.at( x, y ) = g.at( y, x );
  return out;
}

/// Round 4v to the nearest integer, ties toward zero, clamp to +-limit.
inline int float_round_quarter( double v, int limit = 3 )
{
  const double q  = 4.0 * v;
  const double fl = std::floor( std::abs( q ) );
  int k = static_cast<int>( std::abs( q ) - fl > 0.5 ? fl + 1 : fl );
  k = std::min( k, limit );
  return q < 0 ? -k : k;
}

}  // namespace fme::test
