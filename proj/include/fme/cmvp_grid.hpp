#pragma once

#include "fme/motion_vector.hpp"

#include <array>
#include <optional>

namespace fme
{

constexpr int kCtuSize      = 128;
constexpr int kGridDim      = kCtuSize / 8;  // 8x8 positions per CTU row
constexpr int kGridPositions = kGridDim * kGridDim;

/// 8x8-block coordinate inside a CTU, each component in [0, 16).
struct GridPos
{
  int x = 0;
  int y = 0;

  bool operator==( const GridPos& ) const = default;
};

/// CU rectangle in pixels relative to the CTU origin.
struct CuRect
{
  int x0 = 0;
  int y0 = 0;
  int w  = 8;
  int h  = 8;

  GridPos top_left() const { return { x0 / 8, y0 / 8 }; }
  bool operator==( const CuRect& ) const = default;
};

/// Throws unless the rectangle is a valid, size-aligned CU inside the CTU.
void validate_cu( const CuRect& cu );

using MvSlot = std::optional<MotionVector>;

/// MVs just outside the CTU: left_column[y] sits at grid (-1, y), top_row[x] at (x, -1).
struct MvContext
{
  std::array<MvSlot, kGridDim> left_column{};
  std::array<MvSlot, kGridDim> top_row{};

  bool operator==( const MvContext& ) const = default;
};

/// Best MVs of 8x8 CUs for one CTU pass. Each slot is written at most once.
class MvGrid
{
public:
  MvGrid() = default;
  explicit MvGrid( const MvContext& ctx ) : m_ctx( ctx ) {}

  /// Throws a Contract error on a second write to the same slot.
  void record_mv( GridPos pos, const MotionVector& mv );

  /// Slot read; x or y may be -1 to reach the external context.
  MvSlot read( int x, int y ) const;
  bool written( GridPos pos ) const { return m_slots[index( pos )].has_value(); }

  const MvContext& context() const { return m_ctx; }

  /// Right column and bottom row, as context for the CTUs to the right and below.
  std::array<MvSlot, kGridDim> right_column() const;
  std::array<MvSlot, kGridDim> bottom_row() const;

  bool operator==( const MvGrid& ) const = default;

private:
  static std::size_t index( GridPos pos ) { return static_cast<std::size_t>( pos.y * kGridDim + pos.x ); }

  std::array<MvSlot, kGridPositions> m_slots{};
  MvContext m_ctx{};
};

/// Left neighbor of the CU's top-left 8x8 position if present, else the above one, else (0,0).
MotionVector derive_cmvp( const MvGrid& grid, const CuRect& cu );

/// Number of CMVP candidates for `cu` that lie inside the CTU but have not been written yet.
int cmvp_unwritten_in_ctu_reads( const MvGrid& grid, const CuRect& cu );

}  // namespace fme
