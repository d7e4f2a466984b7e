#include "combplan/spectrum.hpp"

#include <bit>
#include <stdexcept>

namespace combplan {

SpectrumGrid::SpectrumGrid(int link_count, int slot_count)
    : link_count_(link_count),
      slot_count_(slot_count),
      words_per_link_((slot_count + 63) / 64),
      words_(static_cast<size_t>(link_count) * words_per_link_, 0) {
  if (link_count < 0 || slot_count <= 0) {
    throw std::invalid_argument("SpectrumGrid: bad dimensions");
  }
}

bool SpectrumGrid::range_free(int link, int start, int width) const {
  if (start < 0 || width < 1 || start + width > slot_count_) return false;
  const uint64_t* w = &words_[static_cast<size_t>(link) * words_per_link_];
  for (int s = start; s < start + width; ++s) {
    if (w[s >> 6] & (uint64_t{1} << (s & 63))) return false;
  }
  return true;
}

void SpectrumGrid::occupy(int link, int start, int width) {
  if (!range_free(link, start, width)) {
    throw std::logic_error("SpectrumGrid::occupy: range not free");
  }
  uint64_t* w = &words_[static_cast<size_t>(link) * words_per_link_];
  for (int s = start; s < start + width; ++s) {
    w[s >> 6] |= uint64_t{1} << (s & 63);
  }
}

std::optional<int> SpectrumGrid::first_fit(std::span<const int> links,
                                           int width) const {
  if (width < 1 || width > slot_count_) return std::nullopt;
  // Merge occupancy across the path, then scan for a free run.
  std::vector<uint64_t> merged(static_cast<size_t>(words_per_link_), 0);
  for (int link : links) {
    const uint64_t* w = &words_[static_cast<size_t>(link) * words_per_link_];
    for (int i = 0; i < words_per_link_; ++i) merged[i] |= w[i];
  }
  int run = 0;
  for (int s = 0; s < slot_count_; ++s) {
    if (merged[s >> 6] & (uint64_t{1} << (s & 63))) {
      run = 0;
    } else if (++run == width) {
      return s - width + 1;
    }
  }
  return std::nullopt;
}

int SpectrumGrid::used_slots(int link) const {
  const uint64_t* w = &words_[static_cast<size_t>(link) * words_per_link_];
  int n = 0;
  for (int i = 0; i < words_per_link_; ++i) n += std::popcount(w[i]);
  return n;
}

double SpectrumGrid::occupancy() const {
  if (link_count_ == 0) return 0.0;
  long total = 0;
  for (int l = 0; l < link_count_; ++l) total += used_slots(l);
  return static_cast<double>(total) /
         (static_cast<double>(link_count_) * slot_count_);
}

}  // namespace combplan
