#include "ucalg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ucalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InvalidInput("bad partition entry '" + item + "'");
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad partition entry '" + item + "'");
    }
  }
  return Partition(std::move(parts));
}

Partition Partition::from_occupations(const std::map<int, int>& counts) {
  std::vector<int> parts;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    auto [part, mult] = *it;
    if (part <= 0) throw InvalidInput("occupation index must be >= 1");
    if (mult < 0) throw InvalidInput("occupation multiplicity must be >= 0");
    parts.insert(parts.end(), mult, part);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 1; col <= part(0); ++col) {
    int count = 0;
    for (int p : parts_)
      if (p >= col) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && part(0) <= cols;
}

std::map<int, int> Partition::occupations() const {
  std::map<int, int> counts;
  for (int p : parts_) ++counts[p];
  return counts;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool interlaces(const Partition& nu, const Partition& la) {
  int n = std::max(nu.length(), la.length());
  for (int i = 0; i < n; ++i) {
    if (nu.part(i) < la.part(i)) return false;
    if (la.part(i) < nu.part(i + 1)) return false;
  }
  return true;
}

namespace {

void sort_canonical(std::vector<Partition>& out) {
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
  });
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& la, int n) {
  if (n < 0) throw InvalidInput("strip size must be >= 0");
  std::vector<Partition> out;
  std::vector<int> nu;
  // Row i of nu ranges over [la_i, la_{i-1}] (row 0 unbounded above), one row
  // past the end of la allowed.
  int rows = la.length() + 1;
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows) {
      if (remaining == 0) {
        std::vector<int> v;
        for (int p : nu)
          if (p > 0) v.push_back(p);
        out.emplace_back(std::move(v));
      }
      return;
    }
    int lo = la.part(i);
    int hi = (i == 0) ? la.part(0) + remaining : std::min(la.part(i - 1), lo + remaining);
    for (int p = lo; p <= hi; ++p) {
      nu.push_back(p);
      self(self, i + 1, remaining - (p - lo));
      nu.pop_back();
    }
  };
  rec(rec, 0, n);
  sort_canonical(out);
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& la, int n) {
  if (n < 0) throw InvalidInput("strip size must be >= 0");
  std::vector<Partition> out;
  std::vector<int> mu;
  int rows = la.length();
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows) {
      if (remaining == 0) {
        std::vector<int> v;
        for (int p : mu)
          if (p > 0) v.push_back(p);
        out.emplace_back(std::move(v));
      }
      return;
    }
    // mu_i ranges over [max(la_{i+1}, la_i - remaining), la_i]; interlacing
    // needs mu_i >= la_{i+1}.
    int hi = la.part(i);
    int lo = std::max(la.part(i + 1), hi - remaining);
    for (int p = hi; p >= lo; --p) {
      mu.push_back(p);
      self(self, i + 1, remaining - (hi - p));
      mu.pop_back();
    }
  };
  rec(rec, 0, n);
  sort_canonical(out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  sort_canonical(out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto pn = partitions_of(n);
    out.insert(out.end(), pn.begin(), pn.end());
  }
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int row, int maxpart) -> void {
    out.emplace_back(cur);
    if (row == rows) return;
    for (int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      self(self, row + 1, p);
      cur.pop_back();
    }
  };
  if (rows < 0 || cols < 0) throw InvalidInput("box dimensions must be >= 0");
  rec(rec, 0, cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ucalg
