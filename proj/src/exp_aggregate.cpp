#include "umtlab/experiments/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "umtlab/error.hpp"

namespace umtlab {

namespace {

using ParamKey = std::tuple<std::string, std::string, double, double,
                            std::uint64_t, std::uint64_t, std::uint64_t,
                            std::uint64_t, std::uint64_t>;
using PointKey = std::tuple<std::string, std::uint64_t>;  // metric, m

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<CellResult>& cells) {
  if (cells.empty()) throw AggregationError("aggregate: no cell results");

  std::map<ParamKey, std::map<PointKey, std::vector<double>>> groups;
  std::map<ParamKey, std::set<std::uint64_t>> replicates_seen;
  for (const CellResult& cell : cells) {
    const ParamKey key{model_name(cell.cell.model),
                       cell.cell.preset,
                       cell.cell.alpha,
                       cell.p,
                       cell.cell.r,
                       cell.n,
                       cell.t_size,
                       cell.p_size,
                       cell.theta_count};
    replicates_seen[key].insert(cell.cell.replicate);
    auto& points = groups[key];
    for (const CellRecord& record : cell.records) {
      points[{record.metric, record.m}].push_back(record.value);
    }
  }

  std::vector<AggregateRow> rows;
  for (const auto& [key, points] : groups) {
    const std::uint64_t expected = replicates_seen[key].size();
    for (const auto& [point, values] : points) {
      if (values.size() != expected) {
        throw AggregationError(
            "aggregate: metric '" + std::get<0>(point) + "' at m=" +
            std::to_string(std::get<1>(point)) + " has " +
            std::to_string(values.size()) + " values for " +
            std::to_string(expected) + " replicates");
      }
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      double stderr_value = 0.0;
      if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        const double stdev =
            std::sqrt(ss / static_cast<double>(values.size() - 1));
        stderr_value = stdev / std::sqrt(static_cast<double>(values.size()));
      }
      AggregateRow row;
      std::tie(row.model, row.preset, row.alpha, row.p, row.r, row.n,
               row.t_size, row.p_size, row.theta_count) = key;
      row.metric = std::get<0>(point);
      row.m = std::get<1>(point);
      row.mean = mean;
      row.stderr_ = stderr_value;
      row.replicates = values.size();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace umtlab
