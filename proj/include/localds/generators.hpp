#pragma once

#include <cstdint>
#include <string>

#include "localds/graph.hpp"

namespace localds {

enum class Family {
  kPath,
  kCycle,
  kTree,
  kOuterplanar,
  kFan,
  kStrip,
  kType1,
  kAugmentation,
  kCliquePendant,
  kRandomFiltered,
};

// size means: vertex count for path/cycle/tree/outerplanar/type1 and
// random_filtered, chord count for fan, column count for strip, clique
// size for clique_pendant.  Augmentations ignore size and are shaped by
// base_size (host graph vertices) and pieces (attached fans/strips).
struct GeneratorSpec {
  Family family = Family::kPath;
  int size = 1;
  int minor_t = 3;    // random_filtered: class to avoid
  int base_size = 8;  // augmentation host size
  int pieces = 2;     // augmentation attachments
  std::uint64_t seed = 0;
};

std::string family_name(Family family);
Family family_from_name(const std::string& name);

// Deterministic for a fixed spec, seed included.
Graph generate(const GeneratorSpec& spec);

}  // namespace localds
