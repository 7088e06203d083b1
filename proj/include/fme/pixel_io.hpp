#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace fme
{

using Pel = std::uint8_t;

enum class RawFormat
{
  Gray8,
  Yuv420pLumaOnly,
};

RawFormat parse_raw_format( std::string_view name );
const char* to_string( RawFormat fmt );

/**
  8-bit luma plane, row-major.

  A plane may carry a margin of readable samples on every side. Logical
  coordinates then range over [-margin, width + margin) horizontally and
  likewise vertically; (0,0) is always the first sample of the visible area.
  Planes loaded from files have no margin. A reference frame that must
  satisfy search-window preconditions near the frame border is prepared by
  the caller with with_margin(), or built directly around real content.
*/
class Plane
{
public:
  Plane() = default;
  Plane( int width, int height, int margin = 0, Pel fill = 0 );

  static Plane from_samples( int width, int height, std::vector<Pel> samples );

  int width() const { return m_width; }
  int height() const { return m_height; }
  int margin() const { return m_margin; }
  std::ptrdiff_t stride() const { return m_stride; }

  Pel at( int x, int y ) const { return m_data[offset( x, y )]; }
  Pel& at( int x, int y ) { return m_data[offset( x, y )]; }

  const Pel* ptr( int x, int y ) const { return m_data.data() + offset( x, y ); }
  Pel* ptr( int x, int y ) { return m_data.data() + offset( x, y ); }

  /// True when the w x h window at (x, y) lies inside the readable area (visible area plus margin).
  bool readable( int x, int y, int w, int h ) const;
  /// True when the window lies inside the visible area.
  bool inside( int x, int y, int w, int h ) const;

  /// Copy with `margin` extra samples per side, filled by edge replication.
  Plane with_margin( int margin ) const;

  /// Visible samples in raster order.
  std::vector<Pel> samples() const;

  bool operator==( const Plane& other ) const;

private:
  std::size_t offset( int x, int y ) const
  {
    return static_cast<std::size_t>( ( y + m_margin ) * m_stride + ( x + m_margin ) );
  }

  int m_width  = 0;
  int m_height = 0;
  int m_margin = 0;
  std::ptrdiff_t m_stride = 0;
  std::vector<Pel> m_data;
};

/// Rectangular window into a plane. Dimensions are restricted to the CU edge lengths 8..128.
class BlockView
{
public:
  BlockView( const Plane& plane, int x, int y, int w, int h );

  const Plane& plane() const { return *m_plane; }
  int x() const { return m_x; }
  int y() const { return m_y; }
  int width() const { return m_w; }
  int height() const { return m_h; }

  Pel at( int dx, int dy ) const { return m_plane->at( m_x + dx, m_y + dy ); }
  const Pel* row( int dy ) const { return m_plane->ptr( m_x, m_y + dy ); }

  BlockView sub( int dx, int dy, int w, int h ) const { return BlockView( *m_plane, m_x + dx, m_y + dy, w, h ); }

private:
  const Plane* m_plane;
  int m_x, m_y, m_w, m_h;
};

bool is_block_dimension( int n );

std::vector<Plane> load_raw_frames( const std::filesystem::path& path, int width, int height, RawFormat format,
                                    int count );

/// Raw bytes of a plane for the given format (chroma of yuv420p written as mid-grey 128).
void write_raw_frames( const std::filesystem::path& path, std::span<const Plane> planes, RawFormat format );

/// Raster-order 8x8 tiling of a view whose dimensions are multiples of 8.
std::vector<BlockView> subblocks_8x8( const BlockView& view );

}  // namespace fme
