#include "fme/ime.hpp"

#include "fme/error.hpp"

#include <string>

namespace fme
{

Metric parse_metric( std::string_view name )
{
  if( name == "sad" )
  {
    return Metric::Sad;
  }
  if( name == "satd" )
  {
    return Metric::Satd;
  }
  throw Error( ErrorKind::InvalidArgument, "unknown metric '" + std::string( name ) + "'" );
}

const char* to_string( Metric m )
{
  return m == Metric::Sad ? "sad" : "satd";
}

int ime_margin( const SearchConfig& cfg )
{
  return cfg.range + 1;
}

ImeResult full_search( const BlockView& orig, const Plane& ref, const MotionVector& center, const SearchConfig& cfg )
{
  FME_CHECK( cfg.range >= 1, InvalidArgument, "search range must be at least 1" );
  FME_CHECK( center.is_integer_pel(), InvalidArgument, "search center must be an integer-pel MV" );

  const int cx = orig.x() + mv_int_part( center.x );
  const int cy = orig.y() + mv_int_part( center.y );
  const int m  = ime_margin( cfg );
  FME_CHECK( ref.readable( cx - m, cy - m, orig.width() + 2 * m, orig.height() + 2 * m ), Window,
             "search window of the " + std::to_string( orig.width() ) + "x" + std::to_string( orig.height() )
               + " block at (" + std::to_string( orig.x() ) + "," + std::to_string( orig.y() )
               + ") leaves the reference plane" );

  ImeResult best{};
  bool have = false;
  for( int dy = -cfg.range; dy <= cfg.range; dy++ )
  {
    for( int dx = -cfg.range; dx <= cfg.range; dx++ )
    {
      const BlockView pred( ref, cx + dx, cy + dy, orig.width(), orig.height() );
      const Distortion d = cfg.metric == Metric::Sad ? sad( orig, pred ) : satd_block( orig, pred );
      const MotionVector mv = center + MotionVector::from_pels( dx, dy );
      if( !have || d < best.cost || ( d == best.cost && tie_break_less( mv, best.mv ) ) )
      {
        best = { mv, d };
        have = true;
      }
    }
  }
  return best;
}

}  // namespace fme
