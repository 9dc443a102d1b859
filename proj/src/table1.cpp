#include "fj/table1.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "fj/error.hpp"

namespace fj {

namespace {

using i64 = std::int64_t;

i64 pw(i64 base, int exp) {
  if (exp < 0) throw Error(ErrorKind::BadParams, "negative exponent in table formula");
  i64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

i64 exact_div(i64 a, i64 b) {
  if (a % b != 0) throw Error(ErrorKind::BadParams, "table formula does not divide evenly");
  return a / b;
}

struct Listed {
  i64 eigenvalue;
  i64 multiplicity;  // -1 marks the starred entry
};

constexpr i64 kStar = -1;

[[noreturn]] void out_of_range(std::string_view label) {
  throw Error(ErrorKind::BadParams, "parameters outside the range of row " + std::string(label));
}

}  // namespace

std::string_view to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::size_t SpectrumReport::multiplicity(long eigenvalue) const {
  for (const auto& p : pairs) {
    if (p.eigenvalue == eigenvalue) return p.multiplicity;
  }
  return 0;
}

std::size_t SpectrumReport::total() const {
  std::size_t s = unaccounted_mass;
  for (const auto& p : pairs) s += p.multiplicity;
  return s;
}

std::string SpectrumReport::to_string() const {
  std::ostringstream out;
  out << "((";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k == 1) out << "; ";
    if (k > 1) out << ", ";
    if (k == 0) {
      out << pairs[k].eigenvalue;
      if (pairs[k].multiplicity != 1) out << "^" << pairs[k].multiplicity;
    } else {
      out << "[" << pairs[k].eigenvalue << "]^" << pairs[k].multiplicity;
    }
  }
  out << "))";
  if (unaccounted_mass) out << " +" << unaccounted_mass << " non-integer";
  return out.str();
}

SpectrumReport normalize_spectrum(std::vector<SpectrumEntry> pairs, std::size_t unaccounted) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.eigenvalue > b.eigenvalue; });
  SpectrumReport out;
  out.unaccounted_mass = unaccounted;
  for (const auto& p : pairs) {
    if (p.multiplicity == 0) continue;
    if (!out.pairs.empty() && out.pairs.back().eigenvalue == p.eigenvalue) {
      out.pairs.back().multiplicity += p.multiplicity;
    } else {
      out.pairs.push_back(p);
    }
  }
  return out;
}

std::string Table1Row::describe() const {
  std::ostringstream out;
  out << label << " h=" << h << " m=" << m;
  if (eps) out << " eps=" << to_string(*eps);
  return out.str();
}

Table1Row table1_row(std::string_view label, int h, int m, std::optional<Sign> eps) {
  i64 size = 0;
  i64 degree = 0;
  std::vector<Listed> rest;
  const bool plus = eps && *eps == Sign::Plus;

  if (label == "trivial") {
    size = 1;
    degree = 0;
  } else if (label == "PR1") {
    if (h < 1) out_of_range(label);
    size = pw(3, h);
    degree = size - 1;
    rest = {{-1, size - 1}};
  } else if (label == "PR2a") {
    if (h < 0 || m < 4) out_of_range(label);
    size = exact_div(pw(2, h) * m * (m - 1), 2);
    degree = pw(2, h + 1) * (m - 2);
    rest = {{pw(2, h) * (m - 4), m - 1}, {0, kStar}, {-pw(2, h + 1), m * (m - 3) / 2}};
  } else if (label == "PR2b") {
    if (h < 1 || m < 4) out_of_range(label);
    size = pw(3, h) * m * (m - 1) / 2;
    degree = pw(3, h) * (2 * m - 3) - 1;
    rest = {{pw(3, h) * (m - 3) - 1, m - 1}, {-1, kStar}, {-pw(3, h) - 1, m * (m - 3) / 2}};
  } else if (label == "PR2c") {
    if (h < 1 || m < 4) out_of_range(label);
    size = pw(3, h) * m * (m - 1);
    degree = pw(3, h) * (4 * m - 7) - 1;
    rest = {{pw(3, h) * (2 * m - 7) - 1, m - 1},
            {pw(3, h) - 1, m * (m - 1) / 2},
            {-1, kStar},
            {-pw(3, h + 1) - 1, m * (m - 3) / 2}};
  } else if (label == "PR2d") {
    if (h < 1 || m < 4) out_of_range(label);
    size = 3 * pw(2, 2 * h - 1) * m * (m - 1);
    degree = pw(4, h) * (6 * m - 10);
    rest = {{pw(4, h) * (3 * m - 10), m - 1},
            {0, kStar},
            {-pw(4, h), m * (m - 1)},
            {-pw(4, h + 1), m * (m - 3) / 2}};
  } else if (label == "PR3") {
    if (!eps || h < 0 || m < 3 || (m == 3 && plus)) out_of_range(label);
    if (plus) {
      size = pw(2, h) * (pw(2, 2 * m - 1) - pw(2, m - 1));
      degree = pw(2, h) * (pw(2, 2 * m - 2) - pw(2, m - 1));
      rest = {{pw(2, h + m - 1), exact_div((pw(2, m) - 1) * (pw(2, m - 1) - 1), 3)},
              {0, kStar},
              {-pw(2, h + m - 2), exact_div(pw(2, 2 * m) - 4, 3)}};
    } else {
      size = pw(2, h) * (pw(2, 2 * m - 1) + pw(2, m - 1));
      degree = pw(2, h) * (pw(2, 2 * m - 2) + pw(2, m - 1));
      rest = {{pw(2, h + m - 2), exact_div(pw(2, 2 * m) - 4, 3)},
              {0, kStar},
              {-pw(2, h + m - 1), exact_div((pw(2, m) + 1) * (pw(2, m - 1) + 1), 3)}};
    }
  } else if (label == "PR4") {
    if (h < 0 || m < 3) out_of_range(label);
    size = pw(2, h) * (pw(2, 2 * m) - 1);
    degree = pw(2, 2 * m - 1 + h);
    rest = {{pw(2, m - 1 + h), pw(2, 2 * m - 1) - pw(2, m - 1) - 1},
            {0, kStar},
            {-pw(2, h + m - 1), pw(2, 2 * m - 1) + pw(2, m - 1) - 1}};
  } else if (label == "PR5") {
    if (!eps || h < 0 || m < 5) out_of_range(label);
    if (m % 2 == 1) {
      const i64 s = pw(3, (m - 1) / 2);
      const i64 ev = pw(3, (m - 3) / 2 + h);
      if (plus) {
        size = pw(3, h) * exact_div(pw(3, m - 1) - s, 2);
        degree = pw(3, h) * (pw(3, m - 2) - 2 * pw(3, (m - 3) / 2)) - 1;
        rest = {{ev - 1, exact_div(pw(3, m - 1) - 1, 4)},
                {-1, kStar},
                {-ev - 1, exact_div(pw(3, m - 1) - 1 - 2 * (s + 1), 4)}};
      } else {
        size = pw(3, h) * exact_div(pw(3, m - 1) + s, 2);
        degree = pw(3, h) * (pw(3, m - 2) + 2 * pw(3, (m - 3) / 2)) - 1;
        rest = {{ev - 1, exact_div(pw(3, m - 1) - 1 + 2 * (s - 1), 4)},
                {-1, kStar},
                {-ev - 1, exact_div(pw(3, m - 1) - 1, 4)}};
      }
    } else {
      if (m < 6) out_of_range(label);
      const i64 s = pw(3, (m - 2) / 2);
      degree = pw(3, m - 2 + h) - 1;
      if (plus) {
        size = pw(3, h) * exact_div(pw(3, m - 1) - s, 2);
        rest = {{pw(3, (m - 4) / 2 + h) - 1, exact_div(pw(3, m) - 9, 8)},
                {-1, kStar},
                {-pw(3, (m - 2) / 2 + h) - 1, exact_div((pw(3, m / 2) - 1) * (s - 1), 8)}};
      } else {
        size = pw(3, h) * exact_div(pw(3, m - 1) + s, 2);
        rest = {{pw(3, (m - 2) / 2 + h) - 1, exact_div((pw(3, m / 2) + 1) * (s + 1), 8)},
                {-1, kStar},
                {-pw(3, (m - 4) / 2 + h) - 1, exact_div(pw(3, m) - 9, 8)}};
      }
    }
  } else if (label == "PR6") {
    if (h < 0 || m < 3) out_of_range(label);
    degree = pw(2, 2 * h + 2 * m - 3);
    if (m % 2 == 0) {
      size = pw(4, h) * exact_div(pw(2, 2 * m - 1) + pw(2, m - 1) - 1, 3);
      rest = {{pw(2, 2 * h + m - 3), exact_div(8 * (pw(2, 2 * m - 3) - pw(2, m - 2) - 1), 9)},
              {0, kStar},
              {-pw(2, 2 * h + m - 2), exact_div(4 * (pw(2, 2 * m - 3) + 7 * pw(2, m - 3) - 1), 9)}};
    } else {
      size = pw(4, h) * exact_div(pw(2, 2 * m - 1) - pw(2, m - 1) - 1, 3);
      rest = {{pw(2, 2 * h + m - 2), exact_div(4 * (pw(2, 2 * m - 3) - 7 * pw(2, m - 3) - 1), 9)},
              {0, kStar},
              {-pw(2, 2 * h + m - 3), exact_div(8 * (pw(2, 2 * m - 3) + pw(2, m - 2) - 1), 9)}};
    }
  } else if (label == "PR7a") {
    size = 3510, degree = 2816, rest = {{8, 3080}, {-64, 429}};
  } else if (label == "PR7b") {
    size = 31671, degree = 28160, rest = {{8, 30888}, {-352, 722}};
  } else if (label == "PR7c") {
    size = 306936, degree = 275264, rest = {{80, 249458}, {-352, 57477}};
  } else if (label == "PR7d") {
    size = 360, degree = 296, rest = {{8, 105}, {-4, 252}, {-64, 2}};
  } else if (label == "PR7e") {
    size = 3240, degree = 2888, rest = {{8, 2457}, {-28, 780}, {-352, 2}};
  } else if (label == "PR8") {
    if (h < 1) out_of_range(label);
    size = 126 * pw(4, h);
    degree = 5 * pw(4, h + 2);
    rest = {{pw(2, 2 * h + 3), 35}, {0, kStar}, {-pw(4, h + 1), 90}};
  } else if (label == "PR9") {
    if (h < 1) out_of_range(label);
    size = 63 * pw(3, h);
    degree = 11 * pw(3, h + 1) - 1;
    rest = {{5 * pw(3, h) - 1, 27}, {-1, kStar}, {-pw(3, h + 1) - 1, 35}};
  } else if (label == "PR10") {
    if (h < 1) out_of_range(label);
    size = 120 * pw(3, h);
    degree = 19 * pw(3, h + 1) - 1;
    rest = {{pw(3, h + 2) - 1, 35}, {-1, kStar}, {-pw(3, h + 1) - 1, 84}};
  } else if (label == "PR11") {
    if (h < 1) out_of_range(label);
    size = 165 * pw(3, 2 * h);
    degree = 43 * pw(3, 2 * h + 1) - 1;
    rest = {{pw(3, 2 * h + 2) - 1, 44}, {-1, kStar}, {-pw(3, 2 * h + 1) - 1, 120}};
  } else if (label == "PR12") {
    if (h < 1) out_of_range(label);
    size = 36 * pw(3, 2 * h);
    degree = 11 * pw(3, 2 * h + 1) - 1;
    rest = {{pw(3, 2 * h) - 1, 27}, {-1, kStar}, {-pw(3, 2 * h + 1) - 1, 8}};
  } else {
    throw Error(ErrorKind::BadParams, "unknown table row '" + std::string(label) + "'");
  }

  i64 listed = 1;
  for (const auto& r : rest) {
    if (r.multiplicity != kStar) listed += r.multiplicity;
  }
  Table1Row row;
  row.label = std::string(label);
  row.h = h;
  row.m = m;
  row.eps = eps;
  row.size = static_cast<std::size_t>(size);
  row.spectrum.push_back({static_cast<long>(degree), 1});
  for (const auto& r : rest) {
    i64 mult = r.multiplicity == kStar ? size - listed : r.multiplicity;
    if (mult < 0) out_of_range(label);
    row.spectrum.push_back({static_cast<long>(r.eigenvalue), static_cast<std::size_t>(mult)});
  }
  i64 total = 0;
  for (const auto& e : row.spectrum) total += static_cast<i64>(e.multiplicity);
  if (total != size) out_of_range(label);
  return row;
}

SpectrumReport expected_spectrum(const Table1Row& row) { return normalize_spectrum(row.spectrum); }

}  // namespace fj
