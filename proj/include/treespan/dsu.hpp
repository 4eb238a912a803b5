#pragma once

#include <numeric>
#include <vector>

namespace treespan {

// Union-find with union by size. merge returns false when both endpoints
// already share a component.
class Dsu {
 public:
  explicit Dsu(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

// Variant with an undo log, for backtracking enumerations. No path
// compression so that undo stays O(1) per merge.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    log_.push_back({a, b});
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int components() const { return components_; }

  size_t mark() const { return log_.size(); }

  void rollback(size_t mark) {
    while (log_.size() > mark) {
      auto [a, b] = log_.back();
      log_.pop_back();
      parent_[b] = b;
      size_[a] -= size_[b];
      ++components_;
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
  std::vector<std::pair<int, int>> log_;
};

}  // namespace treespan
