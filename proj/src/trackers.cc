#include "klsparse/trackers.h"

namespace klsparse {

std::unique_ptr<ComponentTracker> MakeTracker(TrackerKind kind) {
  switch (kind) {
    case TrackerKind::kGeneral:
      return std::make_unique<GeneralTracker>();
    case TrackerKind::kDisjoint:
      return std::make_unique<DisjointTracker>();
    case TrackerKind::kUnweighted:
      return std::make_unique<UnweightedTracker>();
  }
  return nullptr;
}

}  // namespace klsparse
