#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polywang/geometry.hpp"
#include "polywang/labels.hpp"

// The main construction: the 17-label catalog audit, rod and blade boundary
// words for an arbitrary Wang tile set, and the 3-piece (rotation) / 5-piece
// (translation) encodings.

namespace polywang {

struct WangTile {
  int north = 1, east = 1, south = 1, west = 1;
};

struct WangTileSet {
  int color_count = 1;  // m
  std::vector<WangTile> tiles;
  int tile_count() const { return static_cast<int>(tiles.size()); }
  // Throws when a color is out of 1..m or the set is empty.
  void validate() const;
};

enum class WangSide : std::uint8_t { North = 0, East, South, West };
int side_color(const WangTile& t, WangSide s);

// A unit step of a piece outline carrying its edge label.
struct LabeledStep {
  Dir dir;
  Label label;
};
using UnitWord = std::vector<LabeledStep>;

// A piece at unit scale: cells plus one label per boundary unit edge.
struct UnitEdge {
  Cell cell;
  Dir side;  // outward side of the cell the label sits on
  Label label;
};
struct UnitPiece {
  std::string name;
  std::vector<Cell> cells;       // sorted
  std::vector<UnitEdge> edges;   // every boundary unit edge, labeled
  UnitPiece rotated_ccw(int quarter_turns) const;
  UnitPiece normalized() const;  // min corner to origin
  std::pair<int, int> size() const;
};

// Traces a closed unit word (clockwise, interior right) into a unit piece.
UnitPiece trace_unit_word(const std::string& name, const UnitWord& word);

// Expands a unit word into the full cell-scale boundary word by substituting
// each labeled step with the catalog word rotated to the step direction.
BoundaryWord cell_word_from_unit_word(const UnitWord& word);

// --- label catalog audit ----------------------------------------------------

struct LabelDecode {
  int key_index = 0;
  std::vector<int> lock_set;
  std::pair<std::int64_t, std::int64_t> displacement;
  bool simple = false;
};

// Structurally decodes a label word (key up, lock first) of lock length l:
// cavity positions map to lock indices, the key-side excursion to the key
// index. Throws if the word does not fit the layout.
LabelDecode decode_label_word(const BoundaryWord& w, int length);

struct CatalogAuditRow {
  std::string name;
  bool displacement_ok = false;
  bool simple_ok = false;
  bool key_ok = false;
  bool lock_ok = false;
  LabelDecode decode;
};
// Decodes all 17 catalog words and checks them against the stored key
// indices and lock sets; also checks matching symmetry and the variant rule.
struct CatalogAudit {
  std::vector<CatalogAuditRow> rows;
  bool symmetry_ok = false;
  bool variant_rule_ok = false;
  bool all_ok() const;
};
CatalogAudit audit_catalog();

// --- rod / blade assembly ---------------------------------------------------

// Information labels of one color section. I-side sections read
// (i-1) x I1N then (m-i) x I0N; J-side sections (i-1) x J0N then (m-i) x J1N,
// ordered from the information label closest to label 0.
enum class SectionKind { ISide, JSide };
std::vector<Label> color_section(int color, int m, SectionKind kind);

// Which Wang side each of the four section groups of a rod encodes.
// Group order: top first group, top second group, bottom first group (nearest
// the rod's 1-end), bottom second group.
struct SectionConvention {
  std::array<WangSide, 4> group_side{WangSide::West, WangSide::North, WangSide::South,
                                     WangSide::East};
  bool tiles_left_to_right = true;  // section i within a group encodes tile i
};
const SectionConvention& default_section_convention();

// Unit word of the rod for the given tile set (top side first, clockwise).
UnitWord rod_unit_word(const WangTileSet& wts, const SectionConvention& conv =
                                                   default_section_convention());
// Unit word of the blade; depends only on n and m.
UnitWord blade_unit_word(int n, int m);

// Cell-scale boundary words (Table-5 assembly at scale 207).
BoundaryWord rod_word(const WangTileSet& wts,
                      const SectionConvention& conv = default_section_convention());
BoundaryWord blade_word(int n, int m);
// The free tooth piece word (closed, 9 cells).
BoundaryWord tooth_word();

// --- encoding ---------------------------------------------------------------

enum class EncodeMode { Rotation, Translation };

struct EncodedPiece {
  std::string name;       // "tooth", "rod", "rod90", "rod180", "rod270", "blade"
  int orientation = 0;    // quarter turns CCW applied to the base piece
  BoundaryWord word;      // cell-scale outline of the oriented piece
  Polyomino poly;
};

struct EncodedPieceSet {
  EncodeMode mode = EncodeMode::Rotation;
  int n = 0, m = 0;            // as given
  int n_eff = 0, m_eff = 0;    // after padding (construction needs n,m >= 2)
  WangTileSet padded;          // the tile set actually encoded
  std::vector<EncodedPiece> pieces;
  std::vector<int> rod_orientations;  // orientations used by the canonical tiling
};

// Builds the encoded piece set. Rotation mode emits {tooth, rod, blade};
// translation mode emits the tooth, the rod in each orientation used by the
// canonical structure, and the blade. Throws if the canonical structure
// needs more than 3 rod orientations or more than 1 blade orientation.
EncodedPieceSet encode(const WangTileSet& wts, EncodeMode mode);

// Padding used by encode(): duplicates a tile when n == 1 and adds an unused
// color when m == 1. Tiling the plane is preserved in both directions.
WangTileSet pad_for_construction(const WangTileSet& wts);

}  // namespace polywang
