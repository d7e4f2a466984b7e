#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace combplan {

// 4800 GHz C-band on a 12.5 GHz flex grid.
inline constexpr int kDefaultSlotCount = 384;

// Per-link slot occupancy. A slot is held by at most one lightpath or one
// reserved MWS block; allocations are contiguous slot ranges, identical on
// every link of a path.
class SpectrumGrid {
 public:
  explicit SpectrumGrid(int link_count, int slot_count = kDefaultSlotCount);

  int link_count() const { return link_count_; }
  int slot_count() const { return slot_count_; }

  bool range_free(int link, int start, int width) const;
  void occupy(int link, int start, int width);  // throws if any slot is held

  // Smallest start index such that [start, start+width) is free on every
  // listed link; nullopt when blocked.
  std::optional<int> first_fit(std::span<const int> links, int width) const;

  int used_slots(int link) const;
  double occupancy() const;  // fraction of all link-slots held

 private:
  int link_count_;
  int slot_count_;
  int words_per_link_;
  std::vector<uint64_t> words_;  // bit set = slot held
};

inline std::optional<int> first_fit(const SpectrumGrid& grid,
                                    std::span<const int> links, int width) {
  return grid.first_fit(links, width);
}

}  // namespace combplan
