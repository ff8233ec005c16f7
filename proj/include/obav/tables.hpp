#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "obav/rational.hpp"
#include "obav/series.hpp"

namespace obav::tables {

// Reference values for the exact-reproduction suites. Zeros appear where a
// cell is printed as 0.

// p_n = P[T1 = n], rows mu = 1..7, columns n = 1..10.
inline constexpr std::array<std::array<std::string_view, 10>, 7> kFirstTradePmf = {{
    {"1/2", "1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512", "1/1024"},
    {"1/2", "0", "1/8", "1/16", "1/16", "3/64", "5/128", "1/32", "13/512", "21/1024"},
    {"1/2", "0", "1/8", "0", "1/16", "1/64", "5/128", "5/256", "7/256", "19/1024"},
    {"1/2", "0", "1/8", "0", "1/16", "0", "5/128", "1/256", "7/256", "7/1024"},
    {"1/2", "0", "1/8", "0", "1/16", "0", "5/128", "0", "7/256", "1/1024"},
    {"1/2", "0", "1/8", "0", "1/16", "0", "5/128", "0", "7/256", "0"},
    {"1/2", "0", "1/8", "0", "1/16", "0", "5/128", "0", "7/256", "0"},
}};

// q_eps = P[T1 > eps], rows mu = 1..7, columns eps = 1..9.
inline constexpr std::array<std::array<std::string_view, 9>, 7> kFirstTradeSurvival = {{
    {"1/2", "1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512"},
    {"1/2", "1/2", "3/8", "5/16", "1/4", "13/64", "21/128", "17/128", "55/512"},
    {"1/2", "1/2", "3/8", "3/8", "5/16", "19/64", "33/128", "61/256", "27/128"},
    {"1/2", "1/2", "3/8", "3/8", "5/16", "5/16", "35/128", "69/256", "31/128"},
    {"1/2", "1/2", "3/8", "3/8", "5/16", "5/16", "35/128", "35/128", "63/256"},
    {"1/2", "1/2", "3/8", "3/8", "5/16", "5/16", "35/128", "35/128", "63/256"},
    {"1/2", "1/2", "3/8", "3/8", "5/16", "5/16", "35/128", "35/128", "63/256"},
}};

// Printed rational forms of E[z^{L*}]: numerator and denominator polynomial
// (constant first), rows mu = 1..4, columns eps = 1..5.
struct RationalForm {
  std::int64_t numerator;
  std::vector<std::int64_t> denominator;
};

inline const std::array<std::array<RationalForm, 5>, 4>& full_avalanche_forms() {
  static const std::array<std::array<RationalForm, 5>, 4> forms = {{
      {{{1, {2, -1}},
        {1, {4, -2, -1}},
        {1, {8, -4, -2, -1}},
        {1, {16, -8, -4, -2, -1}},
        {1, {32, -16, -8, -4, -2, -1}}}},
      {{{1, {2, -1}},
        {1, {2, -1}},
        {3, {8, -4, 0, -1}},
        {5, {16, -8, 0, -2, -1}},
        {4, {16, -8, 0, -2, -1, -1}}}},
      {{{1, {2, -1}},
        {1, {2, -1}},
        {3, {8, -4, 0, -1}},
        {3, {8, -4, 0, -1}},
        {5, {16, -8, 0, -2, 0, -1}}}},
      {{{1, {2, -1}},
        {1, {2, -1}},
        {3, {8, -4, 0, -1}},
        {3, {8, -4, 0, -1}},
        {5, {16, -8, 0, -2, 0, -1}}}},
  }};
  return forms;
}

inline RationalSeries expand_form(const RationalForm& form, int order) {
  std::vector<Rational> denom;
  denom.reserve(form.denominator.size());
  for (auto d : form.denominator) denom.emplace_back(d);
  return expand_rational_function(Rational(form.numerator), denom, order);
}

// P[L* = k], columns k = 1..8, rows eps = 1..5. One table per mu in 1..4
// (the mu = 3 and mu = 4 tables coincide).
inline constexpr std::array<std::array<std::string_view, 8>, 5> kAvalanchePmfMu1 = {{
    {"1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512"},
    {"1/8", "1/8", "3/32", "5/64", "1/16", "13/256", "21/512", "17/512"},
    {"1/16", "1/16", "1/16", "7/128", "13/256", "3/64", "11/256", "81/2048"},
    {"1/32", "1/32", "1/32", "1/32", "15/512", "29/1024", "7/256", "27/1024"},
    {"1/64", "1/64", "1/64", "1/64", "1/64", "31/2048", "61/4096", "15/1024"},
}};

inline constexpr std::array<std::array<std::string_view, 8>, 5> kAvalanchePmfMu2 = {{
    {"1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512"},
    {"1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512"},
    {"3/16", "3/32", "3/32", "9/128", "3/64", "9/256", "27/1024", "39/2048"},
    {"5/32", "5/64", "5/64", "5/64", "15/256", "45/1024", "75/2048", "125/4096"},
    {"1/8", "1/16", "1/16", "1/16", "1/16", "13/256", "21/512", "37/1024"},
}};

inline constexpr std::array<std::array<std::string_view, 8>, 5> kAvalanchePmfMu34 = {{
    {"1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512"},
    {"1/4", "1/8", "1/16", "1/32", "1/64", "1/128", "1/256", "1/512"},
    {"3/16", "3/32", "3/32", "9/128", "3/64", "9/256", "27/1024", "39/2048"},
    {"3/16", "3/32", "3/32", "9/128", "3/64", "9/256", "27/1024", "39/2048"},
    {"5/32", "5/64", "5/64", "15/256", "15/256", "25/512", "75/2048", "125/4096"},
}};

inline const std::array<std::array<std::string_view, 8>, 5>& avalanche_pmf_table(int mu) {
  if (mu == 1) return kAvalanchePmfMu1;
  if (mu == 2) return kAvalanchePmfMu2;
  return kAvalanchePmfMu34;  // mu = 3 or 4
}

}  // namespace obav::tables
