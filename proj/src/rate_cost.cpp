#include "fme/rate_cost.hpp"

#include "fme/error.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace fme
{

LambdaFixed LambdaFixed::from_qp( int qp )
{
  FME_CHECK( qp >= 0 && qp <= 63, InvalidArgument, "QP must lie in [0, 63]" );
  return from_double( 0.57 * std::exp2( ( qp - 12 ) / 3.0 ) );
}

LambdaFixed LambdaFixed::from_double( double lambda )
{
  FME_CHECK( std::isfinite( lambda ) && lambda >= 0.0 && lambda < 1e9, InvalidArgument, "lambda out of range" );
  return { static_cast<uint64_t>( std::llround( lambda * 65536.0 ) ) };
}

int mvd_component_bits( int v )
{
  FME_CHECK( v > -( 1 << 15 ) && v < ( 1 << 15 ), InvalidArgument,
             "MVD component " + std::to_string( v ) + " outside +-2^15" );
  const uint32_t m = v <= 0 ? static_cast<uint32_t>( -2 * v ) : static_cast<uint32_t>( 2 * v - 1 );
  // floor(log2(m + 1)) == bit_width(m + 1) - 1
  return 2 * ( std::bit_width( m + 1 ) - 1 ) + 1;
}

namespace
{
constexpr int kLutRange = 255;

constexpr std::array<uint8_t, 2 * kLutRange + 1> build_lut()
{
  std::array<uint8_t, 2 * kLutRange + 1> lut{};
  for( int v = -kLutRange; v <= kLutRange; v++ )
  {
    uint32_t m = v <= 0 ? static_cast<uint32_t>( -2 * v ) : static_cast<uint32_t>( 2 * v - 1 );
    int len = 1;
    // one extra prefix and suffix bit for every doubling of m + 1
    for( uint32_t n = m + 1; n > 1; n >>= 1 )
    {
      len += 2;
    }
    lut[static_cast<std::size_t>( v + kLutRange )] = static_cast<uint8_t>( len );
  }
  return lut;
}

constexpr auto kBitsLut = build_lut();
}  // namespace

int mvd_component_bits_lut( int v )
{
  FME_CHECK( v >= -kLutRange && v <= kLutRange, InvalidArgument, "MVD component outside the lookup table" );
  return kBitsLut[static_cast<std::size_t>( v + kLutRange )];
}

int mvd_bits( const MotionVector& mvd )
{
  return mvd_component_bits( mvd.x ) + mvd_component_bits( mvd.y );
}

RdCost rd_cost( Distortion d, const MotionVector& mvd, LambdaFixed lambda )
{
  const uint64_t bits = static_cast<uint64_t>( mvd_bits( mvd ) );
  uint64_t scaled = 0;
  uint64_t total  = 0;
  const bool overflow = __builtin_mul_overflow( lambda.q16, bits, &scaled )
                        || __builtin_add_overflow( scaled, uint64_t{ 1 } << 15, &scaled )
                        || __builtin_add_overflow( d.value, scaled >> 16, &total );
  FME_CHECK( !overflow, InvalidArgument, "R-D cost overflows 64 bits; lambda or distortion is out of range" );
  return { total };
}

}  // namespace fme
