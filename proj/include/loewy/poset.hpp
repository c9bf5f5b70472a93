#pragma once

#include <string>
#include <utility>
#include <vector>

namespace loewy {

/// Finite strict partial order on string labels, given by generating pairs
/// (a, b) meaning a < b. The transitive closure is stored.
class Poset {
 public:
  Poset() = default;
  /// Throws LabelError on duplicate labels or a cycle, UnknownLabel on a pair
  /// naming a missing label.
  Poset(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> less_than);

  /// Antichain on the given labels.
  static Poset discrete(std::vector<std::string> labels);

  /// Same labels with every relation reversed.
  Poset opposite() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::pair<std::string, std::string>>& generating_pairs() const { return pairs_; }
  std::size_t size() const { return labels_.size(); }
  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;

  bool less(std::size_t a, std::size_t b) const { return lt_[a * labels_.size() + b]; }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  bool less(const std::string& a, const std::string& b) const { return less(index_of(a), index_of(b)); }
  bool leq(const std::string& a, const std::string& b) const { return leq(index_of(a), index_of(b)); }

  /// Label indices, every element after everything below it; ties by label order.
  std::vector<std::size_t> linear_extension() const;

  /// Same poset on the same labels, compared as relations.
  bool operator==(const Poset& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::string>> pairs_;
  std::vector<bool> lt_;
};

}  // namespace loewy
