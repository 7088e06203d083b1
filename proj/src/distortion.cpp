#include "fme/distortion.hpp"

#include "fme/error.hpp"

#include <cstdlib>

namespace fme
{

Coeffs4x4 hadamard4x4( const Residual4x4& r )
{
  Coeffs4x4 m{};

  // columns: m = H * r
  for( int c = 0; c < 4; c++ )
  {
    const int32_t t0 = r[0 * 4 + c] + r[1 * 4 + c];
    const int32_t t1 = r[0 * 4 + c] - r[1 * 4 + c];
    const int32_t t2 = r[2 * 4 + c] + r[3 * 4 + c];
    const int32_t t3 = r[2 * 4 + c] - r[3 * 4 + c];
    m[0 * 4 + c] = t0 + t2;
    m[1 * 4 + c] = t1 + t3;
    m[2 * 4 + c] = t0 - t2;
    m[3 * 4 + c] = t1 - t3;
  }

  // rows: out = m * H^T
  Coeffs4x4 out{};
  for( int k = 0; k < 4; k++ )
  {
    const int32_t* row = &m[k * 4];
    const int32_t t0 = row[0] + row[1];
    const int32_t t1 = row[0] - row[1];
    const int32_t t2 = row[2] + row[3];
    const int32_t t3 = row[2] - row[3];
    out[k * 4 + 0] = t0 + t2;
    out[k * 4 + 1] = t1 + t3;
    out[k * 4 + 2] = t0 - t2;
    out[k * 4 + 3] = t1 - t3;
  }
  return out;
}

Distortion satd4x4( const Residual4x4& r )
{
  const Coeffs4x4 c = hadamard4x4( r );
  uint64_t sum = 0;
  for( int32_t v : c )
  {
    sum += static_cast<uint64_t>( std::abs( v ) );
  }
  return { ( sum + 1 ) >> 1 };
}

Residual4x4 residual4x4( const BlockView& orig, const BlockView& pred, int dx, int dy )
{
  Residual4x4 r{};
  for( int y = 0; y < 4; y++ )
  {
    const Pel* o = orig.row( dy + y ) + dx;
    const Pel* p = pred.row( dy + y ) + dx;
    for( int x = 0; x < 4; x++ )
    {
      r[y * 4 + x] = static_cast<int32_t>( o[x] ) - static_cast<int32_t>( p[x] );
    }
  }
  return r;
}

static void check_same_size( const BlockView& a, const BlockView& b )
{
  FME_CHECK( a.width() == b.width() && a.height() == b.height(), InvalidArgument,
             "distortion operands differ in size" );
}

Distortion satd8x8( const BlockView& orig, const BlockView& pred )
{
  FME_CHECK( orig.width() == 8 && orig.height() == 8 && pred.width() == 8 && pred.height() == 8, InvalidArgument,
             "satd8x8 needs two 8x8 views" );
  Distortion d;
  d += satd4x4( residual4x4( orig, pred, 0, 0 ) );
  d += satd4x4( residual4x4( orig, pred, 4, 0 ) );
  d += satd4x4( residual4x4( orig, pred, 0, 4 ) );
  d += satd4x4( residual4x4( orig, pred, 4, 4 ) );
  return d;
}

Distortion satd_block( const BlockView& orig, const BlockView& pred )
{
  check_same_size( orig, pred );
  Distortion d;
  for( int y = 0; y < orig.height(); y += 4 )
  {
    for( int x = 0; x < orig.width(); x += 4 )
    {
      d += satd4x4( residual4x4( orig, pred, x, y ) );
    }
  }
  return d;
}

Distortion sad( const BlockView& orig, const BlockView& pred )
{
  check_same_size( orig, pred );
  uint64_t sum = 0;
  for( int y = 0; y < orig.height(); y++ )
  {
    const Pel* o = orig.row( y );
    const Pel* p = pred.row( y );
    uint32_t row_sum = 0;
    for( int x = 0; x < orig.width(); x++ )
    {
      row_sum += static_cast<uint32_t>( std::abs( static_cast<int>( o[x] ) - static_cast<int>( p[x] ) ) );
    }
    sum += row_sum;
  }
  return { sum };
}

}  // namespace fme
