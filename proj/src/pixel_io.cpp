#include "fme/pixel_io.hpp"

#include "fme/error.hpp"

#include <algorithm>
#include <fstream>
#include <string>

namespace fme
{

const char* to_string( ErrorKind kind )
{
  switch( kind )
  {
  case ErrorKind::InvalidArgument: return "invalid-argument";
  case ErrorKind::Io:              return "io";
  case ErrorKind::Window:          return "window";
  case ErrorKind::Contract:        return "contract";
  case ErrorKind::Invariant:       return "invariant";
  }
  return "unknown";
}

RawFormat parse_raw_format( std::string_view name )
{
  if( name == "gray8" )
  {
    return RawFormat::Gray8;
  }
  if( name == "yuv420p" || name == "yuv420p-luma-only" )
  {
    return RawFormat::Yuv420pLumaOnly;
  }
  throw Error( ErrorKind::InvalidArgument, "unknown raw format '" + std::string( name ) + "'" );
}

const char* to_string( RawFormat fmt )
{
  return fmt == RawFormat::Gray8 ? "gray8" : "yuv420p";
}

Plane::Plane( int width, int height, int margin, Pel fill )
  : m_width( width ), m_height( height ), m_margin( margin ), m_stride( width + 2 * margin )
{
  FME_CHECK( width > 0 && height > 0, InvalidArgument, "plane dimensions must be positive" );
  FME_CHECK( margin >= 0, InvalidArgument, "plane margin must be non-negative" );
  m_data.assign( static_cast<std::size_t>( m_stride ) * static_cast<std::size_t>( height + 2 * margin ), fill );
}

Plane Plane::from_samples( int width, int height, std::vector<Pel> samples )
{
  FME_CHECK( width > 0 && height > 0, InvalidArgument, "plane dimensions must be positive" );
  FME_CHECK( samples.size() == static_cast<std::size_t>( width ) * static_cast<std::size_t>( height ), InvalidArgument,
             "sample count does not match plane dimensions" );
  Plane p;
  p.m_width  = width;
  p.m_height = height;
  p.m_stride = width;
  p.m_data   = std::move( samples );
  return p;
}

bool Plane::readable( int x, int y, int w, int h ) const
{
  return w >= 0 && h >= 0 && x >= -m_margin && y >= -m_margin && x + w <= m_width + m_margin
         && y + h <= m_height + m_margin;
}

bool Plane::inside( int x, int y, int w, int h ) const
{
  return w >= 0 && h >= 0 && x >= 0 && y >= 0 && x + w <= m_width && y + h <= m_height;
}

Plane Plane::with_margin( int margin ) const
{
  Plane out( m_width, m_height, margin );
  for( int y = -margin; y < m_height + margin; y++ )
  {
    const int sy = std::clamp( y, 0, m_height - 1 );
    for( int x = -margin; x < m_width + margin; x++ )
    {
      out.at( x, y ) = at( std::clamp( x, 0, m_width - 1 ), sy );
    }
  }
  return out;
}

std::vector<Pel> Plane::samples() const
{
  std::vector<Pel> out;
  out.reserve( static_cast<std::size_t>( m_width ) * static_cast<std::size_t>( m_height ) );
  for( int y = 0; y < m_height; y++ )
  {
    out.insert( out.end(), ptr( 0, y ), ptr( 0, y ) + m_width );
  }
  return out;
}

bool Plane::operator==( const Plane& other ) const
{
  return m_width == other.m_width && m_height == other.m_height && samples() == other.samples();
}

bool is_block_dimension( int n )
{
  return n == 8 || n == 16 || n == 32 || n == 64 || n == 128;
}

BlockView::BlockView( const Plane& plane, int x, int y, int w, int h ) : m_plane( &plane ), m_x( x ), m_y( y ), m_w( w ), m_h( h )
{
  FME_CHECK( is_block_dimension( w ) && is_block_dimension( h ), InvalidArgument,
             "block dimensions must be one of 8, 16, 32, 64, 128 (got " + std::to_string( w ) + "x" + std::to_string( h ) + ")" );
  FME_CHECK( plane.readable( x, y, w, h ), Window,
             "block " + std::to_string( w ) + "x" + std::to_string( h ) + " at (" + std::to_string( x ) + ","
               + std::to_string( y ) + ") leaves the plane" );
}

static std::size_t frame_stride( int width, int height, RawFormat format )
{
  const std::size_t luma = static_cast<std::size_t>( width ) * static_cast<std::size_t>( height );
  return format == RawFormat::Gray8 ? luma : luma * 3 / 2;
}

std::vector<Plane> load_raw_frames( const std::filesystem::path& path, int width, int height, RawFormat format,
                                    int count )
{
  FME_CHECK( width > 0 && height > 0, InvalidArgument, "frame dimensions must be positive" );
  FME_CHECK( count >= 0, InvalidArgument, "frame count must be non-negative" );

  std::ifstream in( path, std::ios::binary );
  FME_CHECK( in.good(), Io, "cannot open '" + path.string() + "'" );

  const std::size_t stride = frame_stride( width, height, format );
  const std::size_t luma   = static_cast<std::size_t>( width ) * static_cast<std::size_t>( height );

  std::error_code ec;
  const auto size = std::filesystem::file_size( path, ec );
  FME_CHECK( !ec, Io, "cannot stat '" + path.string() + "'" );
  FME_CHECK( size >= stride * static_cast<std::size_t>( count ), Io,
             "file too short: '" + path.string() + "' has " + std::to_string( size ) + " bytes, need "
               + std::to_string( stride * static_cast<std::size_t>( count ) ) );

  std::vector<Plane> frames;
  frames.reserve( static_cast<std::size_t>( count ) );
  std::vector<char> buf( stride );
  for( int i = 0; i < count; i++ )
  {
    in.read( buf.data(), static_cast<std::streamsize>( stride ) );
    FME_CHECK( in.good(), Io, "read error in '" + path.string() + "'" );
    std::vector<Pel> luma_samples( buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>( luma ) );
    frames.push_back( Plane::from_samples( width, height, std::move( luma_samples ) ) );
  }
  return frames;
}

void write_raw_frames( const std::filesystem::path& path, std::span<const Plane> planes, RawFormat format )
{
  std::ofstream out( path, std::ios::binary );
  FME_CHECK( out.good(), Io, "cannot create '" + path.string() + "'" );
  for( const Plane& p : planes )
  {
    const auto s = p.samples();
    out.write( reinterpret_cast<const char*>( s.data() ), static_cast<std::streamsize>( s.size() ) );
    if( format == RawFormat::Yuv420pLumaOnly )
    {
      const std::string chroma( s.size() / 2, static_cast<char>( 128 ) );
      out.write( chroma.data(), static_cast<std::streamsize>( chroma.size() ) );
    }
  }
  FME_CHECK( out.good(), Io, "write error in '" + path.string() + "'" );
}

std::vector<BlockView> subblocks_8x8( const BlockView& view )
{
  FME_CHECK( view.width() % 8 == 0 && view.height() % 8 == 0, InvalidArgument, "view dimensions must be multiples of 8" );
  std::vector<BlockView> out;
  out.reserve( static_cast<std::size_t>( view.width() / 8 ) * static_cast<std::size_t>( view.height() / 8 ) );
  for( int y = 0; y < view.height(); y += 8 )
  {
    for( int x = 0; x < view.width(); x += 8 )
    {
      out.push_back( view.sub( x, y, 8, 8 ) );
    }
  }
  return out;
}

}  // namespace fme
