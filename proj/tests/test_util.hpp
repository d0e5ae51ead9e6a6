#pragma once

#include <cctype>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kacq/series.hpp"

namespace kacq::testing {

// Parses strings such as "t^2 + t^6", "-1 + t", "2*s^2*t".
inline CoeffPoly poly(const std::string& text) {
  CoeffPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto number = [&] {
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    long long c = 1;
    int te = 0, se = 0;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) c = number();
    while (i < text.size() && (text[i] == 't' || text[i] == 's' || text[i] == '*')) {
      if (text[i] == '*') {
        ++i;
        continue;
      }
      char var = text[i++];
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = static_cast<int>(number());
      }
      (var == 't' ? te : se) += e;
    }
    out += CoeffPoly::monomial(te, se, sign * c);
    skip();
  }
  return out;
}

// Pure q-series from (q-degree, coefficient) pairs; degrees may be half-integers via d2.
inline Series qseries(int maxD2, const std::vector<std::pair<int, std::string>>& byD2) {
  Series s(0, TruncationSpec{maxD2, 0});
  for (const auto& [d2, c] : byD2) s.add_to(q_power(d2), poly(c));
  return s;
}

inline Series random_series(std::mt19937& rng, int rank, TruncationSpec spec, int nterms) {
  std::uniform_int_distribution<int> d2(0, spec.maxD2), fin(-spec.box, spec.box), coef(-3, 3), ex(0, 3);
  Series s(rank, spec);
  for (int k = 0; k < nterms; ++k) {
    Vec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = fin(rng);
    s.add_to(Monomial{v, d2(rng)}, CoeffPoly::monomial(ex(rng), ex(rng), coef(rng)));
  }
  return s;
}

}  // namespace kacq::testing
