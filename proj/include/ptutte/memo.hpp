#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace ptutte {

// Sharded string-keyed cache safe for concurrent lookup and insert. Values
// for equal keys are always equal, so a racing duplicate insert is harmless
// and the first writer wins.
template <class Value, std::size_t Shards = 64>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const std::string& key) const {
    const auto& shard = shard_for(key);
    std::shared_lock lock(shard.mutex);
    auto it = shard.map.find(key);
    if (it == shard.map.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const Value& value) {
    auto& shard = shard_for(key);
    std::unique_lock lock(shard.mutex);
    if (shard.map.emplace(key, value).second) size_.fetch_add(1, std::memory_order_relaxed);
  }

  std::size_t size() const { return size_.load(std::memory_order_relaxed); }

  void clear() {
    for (auto& shard : shards_) {
      std::unique_lock lock(shard.mutex);
      shard.map.clear();
    }
    size_ = 0;
  }

 private:
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, Value> map;
  };

  Shard& shard_for(const std::string& key) { return shards_[std::hash<std::string>{}(key) % Shards]; }
  const Shard& shard_for(const std::string& key) const { return shards_[std::hash<std::string>{}(key) % Shards]; }

  std::array<Shard, Shards> shards_;
  std::atomic<std::size_t> size_{0};
};

}  // namespace ptutte
