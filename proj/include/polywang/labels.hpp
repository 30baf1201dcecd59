#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// The 17-label catalog used by the Wang-tile encoding: key indices, lock
// index sets, and the boundary word of every label edge at scale 207.
// Indices follow the catalog row order; key index of label i is i+1.

namespace polywang {

enum class Label : std::uint8_t {
  Zero = 0,  // "0"
  One,       // "1"
  N,
  M,
  MA,    // M_A
  X01,   // X_01
  Y,
  xA,    // x_A
  yA,    // y_A
  I0N,
  I1N,
  J0N,
  J1N,
  L,
  LA,    // L_A
  Xp,    // X'
  Yp,    // Y'
};

inline constexpr int kLabelCount = 17;
inline constexpr int kLabelLength = 17;   // all keys/locks have length 17
inline constexpr int kLabelScale = 207;   // minimum scale for length 17

struct LabelSpec {
  Label label;
  std::string name;
  int key_index;                 // 1..17, bijective over the catalog
  std::vector<int> lock_set;     // sorted key indices admitted by the lock
  std::string word;              // boundary word, key up, left to right, lock first
};

// Full catalog in table order.
const std::vector<LabelSpec>& label_catalog();

const LabelSpec& label_spec(Label l);
std::string_view label_name(Label l);
// Parses a catalog name ("X01", "I0N", "X'", ...). Returns false on unknown.
bool label_from_name(std::string_view name, Label& out);

// True iff the lock of `a` admits the key of `b` (one-sided).
bool lock_admits(Label a, Label b);
// Two labeled edges can abut iff each lock admits the other's key.
bool labels_match(Label a, Label b);

// Regenerates every lock set from the base tables plus the variant rule
// (Z_0N adds keys {0,N}, Z_1N {1,N}, Z_01 {0,1}, Z_A {0,1,N}) and compares
// with the stored catalog. Returns mismatching label names, empty when clean.
std::vector<std::string> audit_variant_rule();

}  // namespace polywang
