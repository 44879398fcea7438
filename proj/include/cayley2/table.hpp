#pragma once

// Per-degree comparison of this library's constructions against the
// published record orders for diameter-two Cayley graphs (degrees 13..57).

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "construction.hpp"
#include "records.hpp"

namespace cayley2 {

/// One row of the published record table. Orders are literature values;
/// `printed_hundredths` is the printed percentage times 100.
struct HistoricalRow {
  int degree;
  std::optional<std::int64_t> eloz;
  std::optional<std::int64_t> ss;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> published_new;
  std::int64_t printed_hundredths;
};

inline const std::vector<HistoricalRow>& historical_table() {
  constexpr auto _ = std::nullopt;
  static const std::vector<HistoricalRow> rows = {
      {13, 112, _, _, _, 6588},      {14, 128, _, _, _, 6497},      {15, 144, _, _, _, 6371},
      {16, 155, _, _, 200, 7782},    {17, 170, _, _, 200, 6896},    {18, 192, _, _, 200, 6153},
      {19, 200, _, _, _, 5524},      {20, 210, _, _, _, 5236},      {21, _, 242, _, 288, 6515},
      {22, _, 242, _, 288, 5938},    {23, _, _, 270, 392, 7396},    {24, _, _, 280, 392, 6793},
      {25, _, 338, _, 392, 6261},    {26, _, 338, _, 392, 5790},    {27, _, _, 378, 392, 5369},
      {28, _, _, 392, 512, 6522},    {29, _, _, 434, 512, 6080},    {30, _, _, 448, 512, 5682},
      {31, _, 512, _, 648, 6735},    {32, _, 512, _, 648, 6321},    {33, _, 512, _, 648, 5944},
      {34, _, 512, _, 648, 5600},    {35, _, _, 630, 648, 5285},    {36, _, _, 648, _, 4996},
      {37, _, 722, _, 800, 5839},    {38, _, 722, _, 800, 5536},    {39, _, _, 774, 800, 5256},
      {40, _, _, 792, 968, 6046},    {41, _, _, 858, 968, 5755},    {42, _, _, 880, 968, 5484},
      {43, _, _, 946, 968, 5232},    {44, _, _, 968, _, 4997},      {45, _, 1058, _, _, 5222},
      {46, _, 1058, _, 1152, 5441},  {47, _, _, 1122, 1152, 5212}, {48, _, _, 1144, 1152, 4997},
      {49, _, 1250, _, 1352, 5628},  {50, _, 1250, _, 1352, 5405},  {51, _, _, 1326, 1352, 5196},
      {52, _, _, 1352, _, 4998},     {53, _, 1458, _, _, 5188},     {54, _, 1458, _, 1568, 5375},
      {55, _, _, 1534, 1568, 5181},  {56, _, _, 1560, 1568, 4998},  {57, _, 1682, _, _, 5175},
  };
  return rows;
}

inline const HistoricalRow* historical_row(int degree) {
  for (const auto& r : historical_table())
    if (r.degree == degree) return &r;
  return nullptr;
}

/// Largest order among the literature columns of a row (excluding our own).
inline std::optional<std::pair<std::int64_t, std::string>> best_historical(const HistoricalRow& row) {
  std::optional<std::pair<std::int64_t, std::string>> best;
  auto take = [&](const std::optional<std::int64_t>& v, const char* name) {
    if (v && (!best || *v > best->first)) best = std::make_pair(*v, std::string(name));
  };
  take(row.eloz, "E.Loz");
  take(row.ss, "SS");
  take(row.a, "A");
  return best;
}

struct ComparisonRow {
  int degree = 0;
  std::int64_t ours = 0;
  std::string ours_source;  // "record" or "family"
  const HistoricalRow* historical = nullptr;
  std::int64_t best = 0;
  std::string best_source;
  std::string percent;  // of `best`, truncated to 2 decimals
};

/// Our best order is the larger of the padded family construction and the
/// record registry; ties with literature values are attributed to ours.
inline ComparisonRow comparison_row(int d) {
  ComparisonRow row;
  row.degree = d;
  row.ours = static_cast<std::int64_t>(construct_for_degree(d).order());
  row.ours_source = "family";
  if (has_record(d)) {
    const auto rec = static_cast<std::int64_t>(record_set(d).order());
    if (rec > row.ours) {
      row.ours = rec;
      row.ours_source = "record";
    }
  }
  row.best = row.ours;
  row.best_source = row.ours_source;
  row.historical = historical_row(d);
  if (row.historical) {
    if (auto h = best_historical(*row.historical); h && h->first > row.best) {
      row.best = h->first;
      row.best_source = h->second;
    }
  }
  row.percent = format_percentage(row.best, d);
  return row;
}

inline std::vector<ComparisonRow> comparison_table(int d_from, int d_to) {
  if (d_from < 8) throw std::invalid_argument("table range must start at degree >= 8");
  if (d_from > d_to) throw std::invalid_argument("empty degree range");
  std::vector<ComparisonRow> rows;
  for (int d = d_from; d <= d_to; ++d) rows.push_back(comparison_row(d));
  return rows;
}

inline void write_comparison_csv(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  os << "degree,best_order,source,percent\n";
  for (const auto& r : rows) os << r.degree << "," << r.best << "," << r.best_source << "," << r.percent << "\n";
}

inline void write_comparison_text(std::ostream& os, const std::vector<ComparisonRow>& rows) {
  auto cell = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  os << std::left << std::setw(7) << "degree" << std::right << std::setw(8) << "E.Loz" << std::setw(8) << "SS"
     << std::setw(8) << "A" << std::setw(8) << "ours" << std::setw(8) << "best" << "  " << std::left << std::setw(8)
     << "source" << std::right << std::setw(8) << "percent" << "\n";
  for (const auto& r : rows) {
    const HistoricalRow* h = r.historical;
    os << std::left << std::setw(7) << r.degree << std::right << std::setw(8) << (h ? cell(h->eloz) : "-")
       << std::setw(8) << (h ? cell(h->ss) : "-") << std::setw(8) << (h ? cell(h->a) : "-") << std::setw(8) << r.ours
       << std::setw(8) << r.best << "  " << std::left << std::setw(8) << r.best_source << std::right << std::setw(8)
       << r.percent << "\n";
  }
}

}  // namespace cayley2
