#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace trisum::detail {

// Append-only memo table: entry i is computed once from entry i-1 and never
// changes afterwards. Readers take a shared lock, so they never see a
// half-appended entry.
template <typename T>
class PrefixCache {
 public:
  using Extend = std::function<T(std::size_t index, const T& previous)>;

  PrefixCache(T first, Extend extend) : extend_(std::move(extend)) {
    values_.push_back(std::move(first));
  }

  T get(std::size_t index) {
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size()) return values_[index];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= index) {
      T next = extend_(values_.size(), values_.back());
      values_.push_back(std::move(next));
    }
    return values_[index];
  }

 private:
  Extend extend_;
  std::shared_mutex mutex_;
  std::vector<T> values_;
};

}  // namespace trisum::detail
