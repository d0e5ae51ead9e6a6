#include "kacq/cone_table.hpp"

#include <algorithm>
#include <numeric>

namespace kacq {

ConeTable::ConeTable(const FiniteRootSystem& f, Kind kind, const std::vector<std::vector<int>>& targets,
                     const CoeffPoly& u) {
  const int l = f.rank();
  std::vector<Vec> points;
  auto visit = [&](const Vec& c) {
    if (index_.try_emplace(c, static_cast<int>(points.size())).second) points.push_back(c);
  };
  for (const auto& t : targets) {
    if (std::any_of(t.begin(), t.end(), [](int x) { return x < 0; })) continue;
    visit(Vec::from(t));
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (int i = 0; i < l; ++i) {
      if (points[k][i] == 0) continue;
      Vec d = points[k];
      d[i] -= 1;
      visit(d);
    }
  }
  auto height = [](const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(points.begin(), points.end(), [&](const Vec& a, const Vec& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (std::size_t k = 0; k < points.size(); ++k) index_[points[k]] = static_cast<int>(k);
  values_.assign(points.size(), CoeffPoly{});
  if (auto it = index_.find(Vec(l)); it != index_.end()) values_[it->second] = CoeffPoly::one();

  std::vector<int> pred(points.size());
  for (const auto& root : f.positive_roots()) {
    Vec beta = Vec::from(root.simple);
    for (std::size_t k = 0; k < points.size(); ++k) {
      Vec d = points[k] - beta;
      auto it = std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; }) ? index_.find(d) : index_.end();
      pred[k] = it == index_.end() ? -1 : it->second;
    }
    if (kind == Kind::Cherednik) {
      for (std::size_t k = points.size(); k-- > 0;)
        if (pred[k] >= 0 && !values_[pred[k]].is_zero()) values_[k] -= values_[pred[k]];
    }
    for (std::size_t k = 0; k < points.size(); ++k)
      if (pred[k] >= 0 && !values_[pred[k]].is_zero()) values_[k] += u * values_[pred[k]];
  }
}

const CoeffPoly& ConeTable::at(const std::vector<int>& c) const {
  if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) return zero_;
  auto it = index_.find(Vec::from(c));
  if (it == index_.end()) throw DomainError("cone table queried outside its computed closure");
  return values_[it->second];
}

bool ConeTable::covers(const std::vector<int>& c) const {
  if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) return true;
  return index_.contains(Vec::from(c));
}

}  // namespace kacq
