#include "polywang/labels.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polywang {
namespace {

struct Row {
  Label label;
  const char* name;
  std::vector<const char*> lock;  // members by catalog name
  const char* word;
};

// Lock sets per the catalog table; boundary words at scale 207 with the key
// oriented upwards, read left to right, lock first. "t" is the tooth
// excursion r2 d2 r u2 r2 u l2 u2 l d2 l2, "T" its left-handed mirror.
// The word of Y is stored with u57 in the lock run; the printed source has
// u51 there, which leaves the segment open by (0,-6) and contradicts the
// index-set spacing (gap before a cavity of index x must be 6x-3 = 57).
const Row kRows[] = {
    {Label::Zero, "0", {"MA", "X01", "xA", "yA", "I0N", "J0N", "LA"},
     "r100 d100 r u12 t u17 t u11 t u5 t u5 t u11 t u5 t u27 r5 u3 T u96 r d100 r100"},
    {Label::One, "1", {"MA", "X01", "xA", "yA", "I1N", "J1N", "LA"},
     "r100 d100 r u12 t u11 t u11 t u11 t u5 t u11 t u5 t u27 r5 u9 T u90 r d100 r100"},
    {Label::N, "N", {"MA", "xA", "yA", "I0N", "I1N", "J0N", "J1N", "LA"},
     "r100 d100 r u12 t u11 t u5 t u5 t u5 t u5 t u5 t u17 t u27 r5 u15 T u84 r d100 r100"},
    {Label::M, "M", {"M", "MA", "L", "LA"},
     "r100 d100 r u12 t u5 t u53 t u5 t u21 r5 u21 T u78 r d100 r100"},
    {Label::MA, "MA", {"M", "MA", "L", "LA", "0", "1", "N"},
     "r100 d100 r u12 t u5 t u53 t u5 t u5 t u5 t u5 t u3 r5 u27 T u72 r d100 r100"},
    {Label::X01, "X01", {"I0N", "I1N", "J0N", "J1N", "L", "LA", "X'", "0", "1"},
     "r100 d100 r u6 t u5 t u5 t u5 t u5 t u5 t u5 t u47 t u5 t u3 r5 u33 T u66 r d100 r100"},
    {Label::Y, "Y", {"I0N", "I1N", "L", "LA", "Y'"},
     "r100 d100 r t u11 t u5 t u17 t u5 t u57 r5 u39 T u60 r d100 r100"},
    {Label::xA, "xA", {"I0N", "I1N", "J0N", "J1N", "L", "LA", "0", "1", "N"},
     "r100 d100 r u12 t u5 t u5 t u5 t u5 t u5 t u41 t u5 t u5 t u3 r5 u45 T u54 r d100 r100"},
    {Label::yA, "yA", {"I0N", "I1N", "L", "LA", "0", "1", "N"},
     "r100 d100 r u12 t u5 t u17 t u5 t u41 t u5 t u5 t u3 r5 u51 T u48 r d100 r100"},
    {Label::I0N, "I0N", {"X01", "Y", "xA", "yA", "L", "LA", "0", "N"},
     "r100 d100 r u12 t u5 t u29 t u5 t u5 t u5 t u17 t u11 t u3 r5 u57 T u42 r d100 r100"},
    {Label::I1N, "I1N", {"X01", "Y", "xA", "yA", "L", "LA", "1", "N"},
     "r100 d100 r u12 t u5 t u29 t u5 t u5 t u5 t u17 t u5 t u9 r5 u63 T u36 r d100 r100"},
    {Label::J0N, "J0N", {"X01", "xA", "L", "LA", "0", "N"},
     "r100 d100 r u12 t u5 t u35 t u11 t u17 t u11 t u3 r5 u69 T u30 r d100 r100"},
    {Label::J1N, "J1N", {"X01", "xA", "L", "LA", "1", "N"},
     "r100 d100 r u12 t u5 t u35 t u11 t u17 t u5 t u9 r5 u75 T u24 r d100 r100"},
    {Label::L, "L", {"M", "MA", "X01", "Y", "xA", "yA", "I0N", "I1N", "J0N", "J1N"},
     "r100 d100 r u24 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u21 r5 u81 T u18 r d100 r100"},
    {Label::LA, "LA",
     {"M", "MA", "X01", "Y", "xA", "yA", "I0N", "I1N", "J0N", "J1N", "0", "1", "N"},
     "r100 d100 r u24 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u5 t u3 "
     "r5 u87 T u12 r d100 r100"},
    {Label::Xp, "X'", {"X01"}, "r100 d100 r u66 t u33 r5 u93 T u6 r d100 r100"},
    {Label::Yp, "Y'", {"Y"}, "r100 d100 r u60 t u39 r5 u99 T r d100 r100"},
};

std::vector<LabelSpec> build_catalog() {
  std::map<std::string, int> key_of;
  for (int i = 0; i < kLabelCount; ++i) key_of[kRows[i].name] = i + 1;
  std::vector<LabelSpec> out;
  out.reserve(kLabelCount);
  for (int i = 0; i < kLabelCount; ++i) {
    LabelSpec s;
    s.label = kRows[i].label;
    s.name = kRows[i].name;
    s.key_index = i + 1;
    for (const char* member : kRows[i].lock) s.lock_set.push_back(key_of.at(member));
    std::sort(s.lock_set.begin(), s.lock_set.end());
    s.word = kRows[i].word;
    out.push_back(std::move(s));
  }
  return out;
}

std::array<std::array<bool, kLabelCount>, kLabelCount> build_admit() {
  std::array<std::array<bool, kLabelCount>, kLabelCount> adm{};
  const auto& cat = label_catalog();
  for (int a = 0; a < kLabelCount; ++a)
    for (int b = 0; b < kLabelCount; ++b)
      adm[a][b] = std::binary_search(cat[a].lock_set.begin(), cat[a].lock_set.end(),
                                     cat[b].key_index);
  return adm;
}

}  // namespace

const std::vector<LabelSpec>& label_catalog() {
  static const std::vector<LabelSpec> cat = build_catalog();
  return cat;
}

const LabelSpec& label_spec(Label l) { return label_catalog()[static_cast<int>(l)]; }

std::string_view label_name(Label l) { return label_spec(l).name; }

bool label_from_name(std::string_view name, Label& out) {
  for (const auto& s : label_catalog()) {
    if (s.name == name) {
      out = s.label;
      return true;
    }
  }
  return false;
}

bool lock_admits(Label a, Label b) {
  static const auto adm = build_admit();
  return adm[static_cast<int>(a)][static_cast<int>(b)];
}

bool labels_match(Label a, Label b) { return lock_admits(a, b) && lock_admits(b, a); }

std::vector<std::string> audit_variant_rule() {
  // Base matching table, pre-variant. Keys are base names.
  const std::map<std::string, std::vector<std::string>> base = {
      {"M", {"M", "L"}},        {"X", {"I", "J", "L", "X'"}}, {"Y", {"I", "L", "Y'"}},
      {"x", {"I", "J", "L"}},   {"y", {"I", "L"}},            {"I", {"X", "Y", "x", "y", "L"}},
      {"J", {"X", "x", "L"}},   {"L", {"M", "X", "Y", "x", "y", "I", "J"}},
      {"X'", {"X"}},            {"Y'", {"Y"}},
  };
  // Catalog variants of each base label, with the key additions the variant
  // suffix grants towards labels 0/1/N.
  struct Variant {
    const char* name;
    std::vector<const char*> adds;  // subset of {"0","1","N"}
  };
  const std::map<std::string, std::vector<Variant>> variants = {
      {"M", {{"M", {}}, {"MA", {"0", "1", "N"}}}},
      {"X", {{"X01", {"0", "1"}}}},
      {"Y", {{"Y", {}}}},
      {"x", {{"xA", {"0", "1", "N"}}}},
      {"y", {{"yA", {"0", "1", "N"}}}},
      {"I", {{"I0N", {"0", "N"}}, {"I1N", {"1", "N"}}}},
      {"J", {{"J0N", {"0", "N"}}, {"J1N", {"1", "N"}}}},
      {"L", {{"L", {}}, {"LA", {"0", "1", "N"}}}},
      {"X'", {{"X'", {}}}},
      {"Y'", {{"Y'", {}}}},
  };
  std::map<std::string, std::set<std::string>> derived;
  for (const auto& [b, vs] : variants) {
    for (const auto& v : vs) {
      std::set<std::string> s;
      for (const auto& partner : base.at(b))
        for (const auto& pv : variants.at(partner)) s.insert(pv.name);
      for (const char* a : v.adds) s.insert(a);
      derived[v.name] = std::move(s);
    }
  }
  // Rows 0/1/N arise from the additions by matching symmetry.
  for (const char* io : {"0", "1", "N"}) {
    std::set<std::string> s;
    for (const auto& [b, vs] : variants)
      for (const auto& v : vs)
        for (const char* a : v.adds)
          if (std::string(a) == io) s.insert(v.name);
    derived[io] = std::move(s);
  }

  std::vector<std::string> mismatches;
  const auto& cat = label_catalog();
  for (const auto& spec : cat) {
    std::set<std::string> stored;
    for (int key : spec.lock_set) stored.insert(cat[key - 1].name);
    if (stored != derived.at(spec.name)) mismatches.push_back(spec.name);
  }
  return mismatches;
}

}  // namespace polywang
