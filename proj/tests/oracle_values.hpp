#pragma once

// Generated by tests/oracles/product_oracle.py; do not edit.

#include <map>
#include <string>
#include <vector>

namespace kacq::testing {

// q^0..q^6 coefficients of the closed product for the basic representation
inline const std::map<std::string, std::vector<std::string>> kProductCoefficients = {
    {"A2~2", {"1", "t^3", "t^6 + t^2", "t^9 + t^5 + t^3", "t^12 + t^8 + t^6 + t^4 + t^2", "t^15 + t^11 + t^9 + t^7 + 2*t^5 + t^3", "t^18 + t^14 + t^12 + t^10 + 2*t^8 + 3*t^6 + t^4 + t^2"}},
    {"A4~2", {"1", "t^5 + t^3", "t^10 + t^8 + t^6 + t^4 + t^2", "t^15 + t^13 + t^11 + 2*t^9 + 2*t^7 + 2*t^5 + t^3", "t^20 + t^18 + t^16 + 2*t^14 + 3*t^12 + 3*t^10 + 4*t^8 + 2*t^6 + 2*t^4 + t^2", "t^25 + t^23 + t^21 + 2*t^19 + 3*t^17 + 4*t^15 + 5*t^13 + 5*t^11 + 5*t^9 + 5*t^7 + 3*t^5 + t^3", "t^30 + t^28 + t^26 + 2*t^24 + 3*t^22 + 4*t^20 + 6*t^18 + 6*t^16 + 8*t^14 + 9*t^12 + 9*t^10 + 7*t^8 + 5*t^6 + 2*t^4 + t^2"}},
    {"A5~2", {"1", "t^5 + t^3", "t^10 + t^8 + 2*t^6 + t^4 + t^2", "t^15 + t^13 + 2*t^11 + 3*t^9 + 2*t^7 + 2*t^5 + t^3", "t^20 + t^18 + 2*t^16 + 3*t^14 + 5*t^12 + 4*t^10 + 5*t^8 + 3*t^6 + 2*t^4 + t^2", "t^25 + t^23 + 2*t^21 + 3*t^19 + 5*t^17 + 7*t^15 + 7*t^13 + 8*t^11 + 7*t^9 + 5*t^7 + 3*t^5 + t^3", "t^30 + t^28 + 2*t^26 + 3*t^24 + 5*t^22 + 7*t^20 + 11*t^18 + 11*t^16 + 14*t^14 + 13*t^12 + 12*t^10 + 9*t^8 + 6*t^6 + 2*t^4 + t^2"}},
    {"D3~2", {"1", "t^3", "t^6 + t^4 + t^2", "t^9 + t^7 + t^5 + t^3", "t^12 + t^10 + 2*t^8 + 2*t^6 + 2*t^4 + t^2", "t^15 + t^13 + 2*t^11 + 2*t^9 + 3*t^7 + 2*t^5 + t^3", "t^18 + t^16 + 2*t^14 + 3*t^12 + 4*t^10 + 4*t^8 + 5*t^6 + 2*t^4 + t^2"}},
    {"D4~3", {"1", "t^4", "t^8 + t^4", "t^12 + t^8 + t^6 + t^2", "t^16 + t^12 + t^10 + t^8 + t^6 + t^4", "t^20 + t^16 + t^14 + t^12 + 2*t^10 + t^8 + t^6 + t^4", "t^24 + t^20 + t^18 + t^16 + 2*t^14 + 3*t^12 + t^10 + 3*t^8 + t^6 + t^4 + t^2"}},
    {"E6~2", {"1", "t^9 + t^5", "t^18 + t^14 + t^12 + t^10 + t^8 + t^6 + t^2", "t^27 + t^23 + t^21 + t^19 + 2*t^17 + 2*t^15 + t^13 + 2*t^11 + t^9 + t^7 + t^5", "t^36 + t^32 + t^30 + t^28 + 2*t^26 + 3*t^24 + 2*t^22 + 4*t^20 + 3*t^18 + 3*t^16 + 4*t^14 + 3*t^12 + 2*t^10 + 2*t^8 + t^6 + t^4 + t^2", "t^45 + t^41 + t^39 + t^37 + 2*t^35 + 3*t^33 + 2*t^31 + 5*t^29 + 4*t^27 + 5*t^25 + 6*t^23 + 6*t^21 + 5*t^19 + 7*t^17 + 4*t^15 + 4*t^13 + 4*t^11 + 2*t^9 + 2*t^7 + t^5", "t^54 + t^50 + t^48 + t^46 + 2*t^44 + 3*t^42 + 2*t^40 + 5*t^38 + 5*t^36 + 6*t^34 + 8*t^32 + 9*t^30 + 8*t^28 + 12*t^26 + 10*t^24 + 11*t^22 + 11*t^20 + 10*t^18 + 8*t^16 + 9*t^14 + 5*t^12 + 5*t^10 + 3*t^8 + 2*t^6 + t^4 + t^2"}},
    {"A1~1", {"1", "t^2", "t^4 + t^2", "t^6 + t^4 + t^2", "t^8 + t^6 + 2*t^4 + t^2", "t^10 + t^8 + 2*t^6 + 2*t^4 + t^2", "t^12 + t^10 + 2*t^8 + 3*t^6 + 3*t^4 + t^2"}},
    {"A2~1", {"1", "t^3 + t^2", "t^6 + t^5 + t^4 + t^3 + t^2", "t^9 + t^8 + t^7 + 2*t^6 + 2*t^5 + t^4 + t^3 + t^2", "t^12 + t^11 + t^10 + 2*t^9 + 3*t^8 + 2*t^7 + 3*t^6 + 3*t^5 + 2*t^4 + t^3 + t^2", "t^15 + t^14 + t^13 + 2*t^12 + 3*t^11 + 3*t^10 + 4*t^9 + 5*t^8 + 4*t^7 + 4*t^6 + 4*t^5 + 2*t^4 + t^3 + t^2", "t^18 + t^17 + t^16 + 2*t^15 + 3*t^14 + 3*t^13 + 5*t^12 + 6*t^11 + 6*t^10 + 7*t^9 + 8*t^8 + 6*t^7 + 6*t^6 + 5*t^5 + 3*t^4 + t^3 + t^2"}},
};

// two-variable product, q^0..q^6 (l = 1) and q^0..q^4 (l = 2)
inline const std::vector<std::string> kTwoVariableL1 = {"1", "s^2*t", "s^4*t^2 + t^2", "s^6*t^3 + s^2*t^3 + s^2*t", "s^8*t^4 + s^4*t^4 + s^4*t^2 + t^4 + t^2", "s^10*t^5 + s^6*t^5 + s^6*t^3 + s^2*t^5 + 2*s^2*t^3 + s^2*t", "s^12*t^6 + s^8*t^6 + s^8*t^4 + s^4*t^6 + 2*s^4*t^4 + 2*s^4*t^2 + t^6 + t^4 + t^2"};
inline const std::vector<std::string> kTwoVariableL2 = {"1", "s^2*t^3 + s^2*t", "s^4*t^6 + s^4*t^4 + s^4*t^2 + t^4 + t^2", "s^6*t^9 + s^6*t^7 + s^6*t^5 + s^6*t^3 + s^2*t^7 + 2*s^2*t^5 + 2*s^2*t^3 + s^2*t", "s^8*t^12 + s^8*t^10 + s^8*t^8 + s^8*t^6 + s^8*t^4 + s^4*t^10 + 2*s^4*t^8 + 3*s^4*t^6 + 3*s^4*t^4 + s^4*t^2 + t^8 + t^6 + 2*t^4 + t^2"};

}  // namespace kacq::testing
