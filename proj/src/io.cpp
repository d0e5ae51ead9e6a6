#include "kacq/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace kacq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json coeff_to_json(const CoeffPoly& c) {
  ordered_json a = ordered_json::array();
  for (const auto& t : c.terms()) a.push_back(ordered_json::array({t.t, t.s, t.c.str()}));
  return a;
}

CoeffPoly coeff_from_json(const json& j) {
  CoeffPoly c;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw SpecMismatchError("coefficient term must be [t, s, \"c\"]");
    c += CoeffPoly::monomial(t[0].get<int>(), t[1].get<int>(), Integer::parse(t[2].get<std::string>()));
  }
  return c;
}

}  // namespace

ordered_json series_to_json(const Series& x) {
  ordered_json j;
  j["rank"] = x.rank();
  j["maxD2"] = x.spec().maxD2;
  j["box"] = x.spec().box;
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : x.sorted_terms()) {
    ordered_json t;
    t["finite"] = m.finite.to_vector();
    t["d2"] = m.d2;
    t["coeff"] = coeff_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Series series_from_json(const json& j) {
  try {
    const int rank = j.at("rank").get<int>();
    if (rank < 0 || rank > kMaxRank) throw SpecMismatchError("rank out of range");
    Series x(rank, {j.at("maxD2").get<int>(), j.at("box").get<int>()});
    for (const auto& t : j.at("terms")) {
      auto f = t.at("finite").get<std::vector<int>>();
      if (static_cast<int>(f.size()) != rank) throw SpecMismatchError("finite part has the wrong length");
      Monomial m{Vec::from(f), t.at("d2").get<int>()};
      if (!x.admits(m)) throw SpecMismatchError("term outside the stored window");
      x.add_to(m, coeff_from_json(t.at("coeff")));
    }
    return x;
  } catch (const json::exception& e) {
    throw SpecMismatchError(std::string("malformed series: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecMismatchError(std::string("malformed coefficient: ") + e.what());
  }
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["lhs"] = r.lhsLabel;
  j["rhs"] = r.rhsLabel;
  j["maxD2"] = r.truncation.maxD2;
  j["box"] = r.truncation.box;
  j["pass"] = r.pass;
  if (r.firstDiscrepancy) {
    ordered_json d;
    d["finite"] = r.firstDiscrepancy->at.finite.to_vector();
    d["d2"] = r.firstDiscrepancy->at.d2;
    d["lhs"] = r.firstDiscrepancy->lhs.str();
    d["rhs"] = r.firstDiscrepancy->rhs.str();
    j["firstDiscrepancy"] = std::move(d);
  } else {
    j["firstDiscrepancy"] = nullptr;
  }
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string key_text(const std::string& algebra, int maxD2, int box, bool twoVariable) {
  return algebra + "|" + std::to_string(maxD2) + "|" + std::to_string(box) + "|" + (twoVariable ? "st" : "t");
}

}  // namespace

std::filesystem::path TableCache::path_for(const std::string& algebra, int maxD2, int box, bool twoVariable) const {
  char name[40];
  std::snprintf(name, sizeof name, "ptable-%016llx.json",
                static_cast<unsigned long long>(fnv1a64(key_text(algebra, maxD2, box, twoVariable))));
  return dir_ / name;
}

std::optional<Series> TableCache::load(const std::string& algebra, int maxD2, int box, bool twoVariable,
                                       std::string* warning) const {
  auto path = path_for(algebra, maxD2, box, twoVariable);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("key").get<std::string>() != key_text(algebra, maxD2, box, twoVariable))
      throw SpecMismatchError("cache key does not match");
    Series s = series_from_json(j.at("table"));
    if (s.spec() != TruncationSpec{maxD2, box}) throw SpecMismatchError("cache window does not match");
    return s;
  } catch (const std::exception& e) {
    if (warning) *warning = "ignoring unreadable cache file " + path.string() + " (" + e.what() + ")";
    return std::nullopt;
  }
}

void TableCache::store(const std::string& algebra, int maxD2, int box, bool twoVariable, const Series& plus) const {
  std::filesystem::create_directories(dir_);
  auto path = path_for(algebra, maxD2, box, twoVariable);
  ordered_json j;
  j["key"] = key_text(algebra, maxD2, box, twoVariable);
  j["table"] = series_to_json(plus);
  // write then rename so a reader never sees half a file
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

PartitionTable cached_partition_table(const AffineAlgebra& g, int maxQ, int boxPadding, bool twoVariable,
                                      const TableCache* cache, std::string* warning) {
  const int depth = weylsum_depth(g, maxQ);
  const int box = PartitionTable::lossless_box(g, depth) + std::max(0, boxPadding);
  if (cache) {
    if (auto s = cache->load(g.id, depth, box, twoVariable, warning)) {
      if (s->rank() == g.l) return PartitionTable(g, std::move(*s), twoVariable);
      if (warning) *warning = "ignoring cache file with the wrong rank";
    }
  }
  PartitionTable t(g, depth, box, twoVariable);
  if (cache) cache->store(g.id, depth, box, twoVariable, t.positive_part());
  return t;
}

}  // namespace kacq
