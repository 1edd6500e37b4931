#include "ybe/linalg.hpp"

#include <algorithm>

namespace ybe {

namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

// a * row - b * pivot, both sorted by column.
SparseRow combine(const SparseRow& row, const BigInt& a, const SparseRow& pivot, const BigInt& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      BigInt v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

const SparseRow* EchelonBasis::find_pivot(std::uint64_t col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), std::make_pair(col, std::size_t{0}));
  if (it == pivots_.end() || it->first != col) return nullptr;
  return &pivot_rows_[it->second];
}

SparseRow EchelonBasis::reduce(SparseRow row) const {
  // Eliminate the leading entry while it sits on a pivot column; entries after
  // a free leading column are left alone, which is enough for rank.
  while (!row.empty()) {
    const SparseRow* piv = find_pivot(row.front().first);
    if (!piv) break;
    const BigInt& lead = piv->front().second;
    BigInt g = boost::multiprecision::gcd(lead, row.front().second);
    BigInt a = lead / g;
    BigInt b = row.front().second / g;
    row = combine(row, a, *piv, b);
    make_primitive(row);
  }
  return row;
}

bool EchelonBasis::insert(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  SparseRow merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  row = std::move(merged);
  row.erase(std::remove_if(row.begin(), row.end(), [](const auto& e) { return e.second == 0; }), row.end());
  make_primitive(row);
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::uint64_t col = row.front().first;
  pivot_rows_.push_back(std::move(row));
  auto entry = std::make_pair(col, pivot_rows_.size() - 1);
  pivots_.insert(std::lower_bound(pivots_.begin(), pivots_.end(), entry), entry);
  return true;
}

std::size_t exact_rank(const std::vector<SparseRow>& rows) {
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(r);
  return basis.rank();
}

}  // namespace ybe
