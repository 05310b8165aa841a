#ifndef MCR_OBSTACLE_SET_HPP
#define MCR_OBSTACLE_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef MCR_MAX_OBSTACLES
#define MCR_MAX_OBSTACLES 512
#endif

namespace mcr {

using ObstacleId = int;

// Fixed-capacity bitset of obstacle ids. Only the first `words_used_` words
// are ever touched, so sets over a small universe stay cheap even though the
// storage is sized for the compile-time capacity.
class ObstacleSet {
 public:
  static constexpr std::size_t kCapacity = MCR_MAX_OBSTACLES;
  static constexpr std::size_t kWords = (kCapacity + 63) / 64;

  ObstacleSet() = default;

  // An empty set able to hold ids in [0, universe).
  explicit ObstacleSet(std::size_t universe) {
    if (universe > kCapacity) {
      throw std::length_error("obstacle count " + std::to_string(universe) +
                              " exceeds bitset capacity " +
                              std::to_string(kCapacity));
    }
    words_used_ = static_cast<std::uint16_t>((universe + 63) / 64);
  }

  ObstacleSet(std::size_t universe, std::initializer_list<ObstacleId> ids)
      : ObstacleSet(universe) {
    for (ObstacleId id : ids) insert(id);
  }

  static ObstacleSet from_ids(std::size_t universe,
                              const std::vector<ObstacleId>& ids) {
    ObstacleSet set(universe);
    for (ObstacleId id : ids) set.insert(id);
    return set;
  }

  void insert(ObstacleId id) {
    const auto word = static_cast<std::size_t>(id) / 64;
    if (id < 0 || word >= words_used_) {
      throw std::out_of_range("obstacle id " + std::to_string(id) +
                              " outside set universe");
    }
    words_[word] |= std::uint64_t{1} << (static_cast<unsigned>(id) % 64);
  }

  bool contains(ObstacleId id) const {
    const auto word = static_cast<std::size_t>(id) / 64;
    if (id < 0 || word >= words_used_) return false;
    return (words_[word] >> (static_cast<unsigned>(id) % 64)) & 1U;
  }

  int size() const {
    int count = 0;
    for (std::size_t i = 0; i < words_used_; ++i) {
      count += std::popcount(words_[i]);
    }
    return count;
  }

  bool empty() const {
    for (std::size_t i = 0; i < words_used_; ++i) {
      if (words_[i] != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const ObstacleSet& other) const {
    for (std::size_t i = 0; i < words_used_; ++i) {
      const std::uint64_t theirs = i < other.words_used_ ? other.words_[i] : 0;
      if ((words_[i] & ~theirs) != 0) return false;
    }
    return true;
  }

  ObstacleSet& operator|=(const ObstacleSet& other) {
    if (other.words_used_ > words_used_) words_used_ = other.words_used_;
    for (std::size_t i = 0; i < other.words_used_; ++i) {
      words_[i] |= other.words_[i];
    }
    return *this;
  }

  friend ObstacleSet operator|(ObstacleSet lhs, const ObstacleSet& rhs) {
    lhs |= rhs;
    return lhs;
  }

  // Ids in increasing order.
  std::vector<ObstacleId> to_vector() const {
    std::vector<ObstacleId> ids;
    for (std::size_t i = 0; i < words_used_; ++i) {
      std::uint64_t bits = words_[i];
      while (bits != 0) {
        ids.push_back(static_cast<ObstacleId>(i * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return ids;
  }

  // Equality ignores the universe size: two sets are equal when they hold
  // the same ids.
  friend bool operator==(const ObstacleSet& a, const ObstacleSet& b) {
    const std::size_t n = a.words_used_ > b.words_used_ ? a.words_used_
                                                         : b.words_used_;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.words_[i] != b.words_[i]) return false;
    }
    return true;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < words_used_; ++i) {
      if (words_[i] == 0) continue;  // keep hash consistent with operator==
      h ^= (words_[i] ^ (i * 0xff51afd7ed558ccdULL)) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
  std::uint16_t words_used_ = 0;
};

}  // namespace mcr

template <>
struct std::hash<mcr::ObstacleSet> {
  std::size_t operator()(const mcr::ObstacleSet& set) const noexcept {
    return set.hash();
  }
};

#endif  // MCR_OBSTACLE_SET_HPP
