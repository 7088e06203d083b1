#include "fme/cmvp_grid.hpp"

#include "fme/error.hpp"
#include "fme/pixel_io.hpp"

#include <string>

namespace fme
{

void validate_cu( const CuRect& cu )
{
  FME_CHECK( is_block_dimension( cu.w ) && is_block_dimension( cu.h ), InvalidArgument, "unsupported CU size" );
  FME_CHECK( cu.x0 >= 0 && cu.y0 >= 0 && cu.x0 + cu.w <= kCtuSize && cu.y0 + cu.h <= kCtuSize, InvalidArgument,
             "CU leaves the CTU" );
  FME_CHECK( cu.x0 % cu.w == 0 && cu.y0 % cu.h == 0, InvalidArgument, "CU is not aligned to its size grid" );
}

void MvGrid::record_mv( GridPos pos, const MotionVector& mv )
{
  FME_CHECK( pos.x >= 0 && pos.x < kGridDim && pos.y >= 0 && pos.y < kGridDim, InvalidArgument,
             "grid position out of range" );
  MvSlot& slot = m_slots[index( pos )];
  FME_CHECK( !slot.has_value(), Contract,
             "MV grid slot (" + std::to_string( pos.x ) + "," + std::to_string( pos.y ) + ") written twice" );
  slot = mv;
}

MvSlot MvGrid::read( int x, int y ) const
{
  FME_CHECK( x >= -1 && x < kGridDim && y >= -1 && y < kGridDim && !( x < 0 && y < 0 ), InvalidArgument,
             "grid read out of range" );
  if( x < 0 )
  {
    return m_ctx.left_column[static_cast<std::size_t>( y )];
  }
  if( y < 0 )
  {
    return m_ctx.top_row[static_cast<std::size_t>( x )];
  }
  return m_slots[index( { x, y } )];
}

std::array<MvSlot, kGridDim> MvGrid::right_column() const
{
  std::array<MvSlot, kGridDim> out{};
  for( int y = 0; y < kGridDim; y++ )
  {
    out[static_cast<std::size_t>( y )] = m_slots[index( { kGridDim - 1, y } )];
  }
  return out;
}

std::array<MvSlot, kGridDim> MvGrid::bottom_row() const
{
  std::array<MvSlot, kGridDim> out{};
  for( int x = 0; x < kGridDim; x++ )
  {
    out[static_cast<std::size_t>( x )] = m_slots[index( { x, kGridDim - 1 } )];
  }
  return out;
}

MotionVector derive_cmvp( const MvGrid& grid, const CuRect& cu )
{
  const GridPos tl = cu.top_left();
  if( const MvSlot left = grid.read( tl.x - 1, tl.y ) )
  {
    return *left;
  }
  if( const MvSlot above = grid.read( tl.x, tl.y - 1 ) )
  {
    return *above;
  }
  return {};
}

int cmvp_unwritten_in_ctu_reads( const MvGrid& grid, const CuRect& cu )
{
  const GridPos tl = cu.top_left();
  int n = 0;
  if( tl.x > 0 && !grid.written( { tl.x - 1, tl.y } ) )
  {
    n++;
  }
  if( tl.y > 0 && !grid.written( { tl.x, tl.y - 1 } ) )
  {
    n++;
  }
  return n;
}

}  // namespace fme
