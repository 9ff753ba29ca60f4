#pragma once

#include <map>
#include <string>
#include <vector>

#include "ucalg/error.hpp"

namespace ucalg {

// Integer partition: weakly decreasing positive parts. The empty partition is
// the default value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);  // "2,1,1"; "" is empty
  // Multiplicities {part -> count}, parts >= 1.
  static Partition from_occupations(const std::map<int, int>& counts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool fits_in_box(int rows, int cols) const;
  std::map<int, int> occupations() const;

  std::string str() const;  // "2,1,1"; empty partition renders ""

  auto operator<=>(const Partition& o) const = default;

 private:
  std::vector<int> parts_;
};

// nu/la is a horizontal strip: nu_1 >= la_1 >= nu_2 >= la_2 >= ...
bool interlaces(const Partition& nu, const Partition& la);

// All nu >= la with |nu| = |la| + n and nu/la a horizontal strip.
std::vector<Partition> add_horizontal_strips(const Partition& la, int n);
// All mu <= la with |mu| = |la| - n and la/mu a horizontal strip.
std::vector<Partition> remove_horizontal_strips(const Partition& la, int n);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_weight);
// Partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace ucalg
