#include "loewy/poset.hpp"

#include <algorithm>
#include <set>

#include "loewy/error.hpp"

namespace loewy {

Poset::Poset(std::vector<std::string> labels, std::vector<std::pair<std::string, std::string>> less_than)
    : labels_(std::move(labels)), pairs_(std::move(less_than)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw LabelError("duplicate poset label '" + l + "'");
  }
  lt_.assign(n * n, false);
  for (const auto& [a, b] : pairs_) lt_[index_of(a) * n + index_of(b)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!lt_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (lt_[k * n + j]) lt_[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lt_[i * n + i]) throw LabelError("poset relation has a cycle through '" + labels_[i] + "'");
  }
}

Poset Poset::discrete(std::vector<std::string> labels) { return Poset(std::move(labels), {}); }

bool Poset::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t Poset::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UnknownLabel(label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> Poset::linear_extension() const {
  const std::size_t n = labels_.size();
  std::vector<std::size_t> out;
  std::vector<bool> placed(n, false);
  while (out.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (std::size_t j = 0; j < n && ready; ++j) {
        if (!placed[j] && less(j, i)) ready = false;
      }
      if (ready) {
        placed[i] = true;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

bool Poset::operator==(const Poset& other) const { return labels_ == other.labels_ && lt_ == other.lt_; }

Poset Poset::opposite() const {
  std::vector<std::pair<std::string, std::string>> flipped;
  for (const auto& [a, b] : pairs_) flipped.emplace_back(b, a);
  return Poset(labels_, std::move(flipped));
}

}  // namespace loewy
