#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubcomb {

// Finite poset stored as its Hasse diagram. Elements carry an opaque key
// (their canonical single-line serialization) and an optional label used by
// label-respecting isomorphism search.
class Poset {
 public:
  struct Element {
    std::string key;
    std::string label;
    bool operator==(const Element&) const = default;
  };

  Poset() = default;
  // Elements are sorted by key; covers are validated to be acyclic and
  // irredundant (no cover implied by transitivity).
  Poset(std::vector<Element> elements, std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Element>& elements() const { return elements_; }
  // Pairs (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int index_of(std::string_view key) const;  // -1 when absent

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  Poset dual() const;
  Poset relabeled(const std::function<std::string(const Element&)>& f) const;
  // Elements are pairs; covers change exactly one coordinate by a cover.
  static Poset product(const Poset& p, const Poset& q);

  // Cover-preserving bijection this -> other as an index map, when one
  // exists. Respects labels when asked. Deterministic for fixed inputs.
  std::optional<std::vector<int>> isomorphism(const Poset& other, bool respect_labels) const;
  bool is_isomorphic_to(const Poset& other, bool respect_labels) const {
    return isomorphism(other, respect_labels).has_value();
  }

  std::string dot() const;

  bool operator==(const Poset&) const = default;

  static constexpr int kMaxIsomorphismSize = 20000;
  static constexpr char kProductSeparator[] = " | ";

 private:
  std::vector<Element> elements_;
  std::vector<std::pair<int, int>> covers_;
};

// Builds a poset from single-move edges: keeps reachability, drops transitive
// edges, and rejects cyclic move systems.
Poset poset_from_move_edges(const std::map<std::string, std::string>& labels_by_key,
                            const std::set<std::pair<std::string, std::string>>& edges);

// Breadth-first closure of a move system from a seed. The key function must
// serialize elements canonically; covers are single moves.
template <class T, class Succ, class Key, class Label>
Poset move_closure(const T& seed, Succ&& successors, Key&& key_fn, Label&& label_fn) {
  std::map<std::string, std::string> labels;
  std::set<std::pair<std::string, std::string>> edges;
  std::vector<T> frontier{seed};
  labels.emplace(key_fn(seed), label_fn(seed));
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& x : frontier) {
      const std::string xk = key_fn(x);
      for (const T& y : successors(x)) {
        const std::string yk = key_fn(y);
        if (yk == xk) throw std::runtime_error("move closure: move system has a self-loop");
        edges.emplace(xk, yk);
        if (labels.emplace(yk, label_fn(y)).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return poset_from_move_edges(labels, edges);
}

}  // namespace schubcomb
