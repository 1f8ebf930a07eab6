/**
 * @file memo.hpp
 * @brief Shared memoization cache for the skein-recursion engines.
 */
#pragma once

#include <cstdlib>
#include <mutex>
#include <string>
#include <unordered_map>

#include "laurent.hpp"

namespace kauffman {

/**
 * @brief Thread-safe string-keyed cache of Laurent-polynomial values.
 *
 * The capacity is read from the SKEIN_MEMO_CAP environment variable (number
 * of entries; unlimited when unset or unparsable).  Once full the cache
 * keeps serving hits but silently drops new insertions, so recursions stay
 * correct under any cap, including SKEIN_MEMO_CAP=0.
 */
class MemoCache {
 public:
  MemoCache() : cap_(read_cap()) {}

  /// Looks up @p key; fills @p out and returns true on a hit.
  bool find(const std::string& key, LaurentPoly& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  /// Stores a value unless the cache is at capacity.
  void store(const std::string& key, const LaurentPoly& value) {
    std::lock_guard<std::mutex> lock(mu_);
    if (table_.size() >= cap_) return;
    table_.emplace(key, value);
  }

  /// Number of entries currently held.
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

  /// Empties the cache and re-reads SKEIN_MEMO_CAP (so tests can vary it).
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    table_.clear();
    cap_ = read_cap();
  }

 private:
  static std::size_t read_cap() {
    const char* env = std::getenv("SKEIN_MEMO_CAP");
    if (!env || !*env) return static_cast<std::size_t>(-1);
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(v);
  }

  mutable std::mutex mu_;
  std::unordered_map<std::string, LaurentPoly> table_;
  std::size_t cap_;  ///< Maximum entry count; SIZE_MAX when uncapped.
};

/// The process-wide cache shared by the skein engines.
MemoCache& skein_memo();

/// Number of entries currently held by the shared skein memo cache.
std::size_t skein_memo_size();

/// Empties the shared cache and re-reads SKEIN_MEMO_CAP from the environment.
void skein_memo_clear();

}  // namespace kauffman
