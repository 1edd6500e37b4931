#include "ybe/permutation.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "ybe/error.hpp"

namespace ybe {

bool is_bijection(const std::vector<int>& table) {
  std::vector<char> seen(table.size(), 0);
  for (int v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= table.size() || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (q > std::numeric_limits<std::uint64_t>::max() / b)
    fail(ErrorKind::BudgetExceeded, "lcm overflows 64 bits");
  return q * b;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (!is_bijection(img_)) fail(ErrorKind::NotBijective, "image table is not a permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::string& text) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::Parse, "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) fail(ErrorKind::Parse, "unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) fail(ErrorKind::Parse, "bad character in cycle notation: " + text);
      int v = std::stoi(text.substr(start, i - start));
      if (v >= n) fail(ErrorKind::BadLabel, "label " + std::to_string(v) + " out of range");
      if (used[static_cast<std::size_t>(v)]) fail(ErrorKind::Parse, "repeated label in cycles: " + text);
      used[static_cast<std::size_t>(v)] = 1;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<int> v(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    v[x] = img_[static_cast<std::size_t>(other.img_[x])];
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) v[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return Permutation(std::move(v));
}

Permutation Permutation::power(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation acc = identity(size());
  while (e) {
    if (e & 1ULL) acc = acc.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != static_cast<int>(x)) return false;
  return true;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    std::size_t y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = static_cast<std::size_t>(img_[y]);
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (int len : cycle_lengths()) o = checked_lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::string Permutation::to_cycles(int base) const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == static_cast<int>(x)) continue;
    os << '(';
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = 1;
      if (!first) os << ' ';
      os << static_cast<int>(y) + base;
      first = false;
      y = static_cast<std::size_t>(img_[y]);
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace ybe
