#include "fme/oracle.hpp"

#include "fme/distortion.hpp"
#include "fme/error.hpp"

#include <Eigen/Dense>

#include <string>

namespace fme
{

Plane interp_block( const Plane& ref, int ox, int oy, int w, int h, int fx, int fy, InterpKind kind )
{
  FME_CHECK( kind == InterpKind::Bilinear, InvalidArgument, "unsupported interpolation kind" );
  FME_CHECK( fx >= 0 && fx <= 3 && fy >= 0 && fy <= 3, InvalidArgument, "fraction must lie in [0, 3]" );
  FME_CHECK( ref.readable( ox, oy, w + ( fx ? 1 : 0 ), h + ( fy ? 1 : 0 ) ), Window,
             "interpolation window at (" + std::to_string( ox ) + "," + std::to_string( oy )
               + ") leaves the reference plane" );

  Plane out( w, h );
  const int w00 = ( 4 - fx ) * ( 4 - fy );
  const int w10 = fx * ( 4 - fy );
  const int w01 = ( 4 - fx ) * fy;
  const int w11 = fx * fy;
  for( int y = 0; y < h; y++ )
  {
    for( int x = 0; x < w; x++ )
    {
      const int p00 = ref.at( ox + x, oy + y );
      const int p10 = fx ? ref.at( ox + x + 1, oy + y ) : 0;
      const int p01 = fy ? ref.at( ox + x, oy + y + 1 ) : 0;
      const int p11 = fx && fy ? ref.at( ox + x + 1, oy + y + 1 ) : 0;
      out.at( x, y ) = static_cast<Pel>( ( w00 * p00 + w10 * p10 + w01 * p01 + w11 * p11 + 8 ) >> 4 );
    }
  }
  return out;
}

Plane predict_block( const Plane& ref, int x, int y, int w, int h, const MotionVector& mv )
{
  return interp_block( ref, x + mv_int_part( mv.x ), y + mv_int_part( mv.y ), w, h, mv_frac_part( mv.x ),
                       mv_frac_part( mv.y ) );
}

OracleResult evaluate_mv( const BlockView& orig, const Plane& ref, const MotionVector& mv, LambdaFixed lambda,
                          const MotionVector& mvp )
{
  const Plane pred = predict_block( ref, orig.x(), orig.y(), orig.width(), orig.height(), mv );
  const Distortion d = satd_block( orig, BlockView( pred, 0, 0, orig.width(), orig.height() ) );
  return { mv, rd_cost( d, mv - mvp, lambda ), d };
}

namespace
{
bool better( const OracleResult& cand, const OracleResult& best, const MotionVector& imv )
{
  if( cand.cost != best.cost )
  {
    return cand.cost < best.cost;
  }
  return tie_break_less( cand.mv - imv, best.mv - imv );
}
}  // namespace

OracleResult exhaustive_quarter_search( const BlockView& orig, const Plane& ref, const MotionVector& imv,
                                        LambdaFixed lambda, const MotionVector& mvp )
{
  OracleResult best = evaluate_mv( orig, ref, imv, lambda, mvp );
  for( int qy = -3; qy <= 3; qy++ )
  {
    for( int qx = -3; qx <= 3; qx++ )
    {
      const OracleResult r = evaluate_mv( orig, ref, imv + MotionVector{ qx, qy }, lambda, mvp );
      if( better( r, best, imv ) )
      {
        best = r;
      }
    }
  }
  return best;
}

OracleResult two_step_search( const BlockView& orig, const Plane& ref, const MotionVector& imv, LambdaFixed lambda,
                              const MotionVector& mvp )
{
  OracleResult best = evaluate_mv( orig, ref, imv, lambda, mvp );
  for( int step : { 2, 1 } )
  {
    const MotionVector center = best.mv;
    for( int dy = -1; dy <= 1; dy++ )
    {
      for( int dx = -1; dx <= 1; dx++ )
      {
        if( dx == 0 && dy == 0 )
        {
          continue;
        }
        const OracleResult r = evaluate_mv( orig, ref, center + MotionVector{ dx * step, dy * step }, lambda, mvp );
        if( better( r, best, imv ) )
        {
          best = r;
        }
      }
    }
  }
  return best;
}

DesignMatrix surface_design()
{
  DesignMatrix X{};
  for( int y = -1; y <= 1; y++ )
  {
    for( int x = -1; x <= 1; x++ )
    {
      X[static_cast<std::size_t>( ( y + 1 ) * 3 + ( x + 1 ) )] = { double( x * x ), double( y * y ), double( x * y ),
                                                                   double( x ), double( y ), 1.0 };
    }
  }
  return X;
}

std::array<double, 6> lsq_solve( const DesignMatrix& design, const std::array<double, 9>& costs )
{
  Eigen::Matrix<double, 9, 6> X;
  Eigen::Matrix<double, 9, 1> c;
  for( int i = 0; i < 9; i++ )
  {
    for( int j = 0; j < 6; j++ )
    {
      X( i, j ) = design[static_cast<std::size_t>( i )][static_cast<std::size_t>( j )];
    }
    c( i ) = costs[static_cast<std::size_t>( i )];
  }

  const Eigen::Matrix<double, 6, 6> normal = X.transpose() * X;
  Eigen::FullPivLU<Eigen::Matrix<double, 6, 6>> lu( normal );
  FME_CHECK( lu.rank() == 6, InvalidArgument, "least-squares design matrix is rank deficient" );

  const Eigen::Matrix<double, 6, 1> p = normal.ldlt().solve( X.transpose() * c );
  std::array<double, 6> out{};
  for( int j = 0; j < 6; j++ )
  {
    out[static_cast<std::size_t>( j )] = p( j );
  }
  return out;
}

}  // namespace fme
