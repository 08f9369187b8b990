/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#include "sdpi/channel.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace sdpi {

Channel::Channel(std::vector<Distribution> rows, std::optional<std::string> name)
    : rows_(std::move(rows)), name_(std::move(name)) {
  if (rows_.empty()) {
    throw std::invalid_argument("channel: at least one row required");
  }
  const std::size_t cols = rows_.front().size();
  for (const Distribution& r : rows_) {
    if (r.size() != cols) {
      throw std::invalid_argument("channel: ragged rows");
    }
  }
}

std::vector<double> Channel::push_forward(std::span<const double> input) const {
  if (input.size() != input_size()) {
    throw std::invalid_argument("push_forward: dimension mismatch");
  }
  std::vector<double> out(output_size(), 0.0);
  for (std::size_t x = 0; x < input.size(); ++x) {
    const double w = input[x];
    if (w == 0.0) continue;
    const auto r = rows_[x].probs();
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += w * r[y];
  }
  return out;
}

Channel parse_channel(std::string_view text, bool normalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("channel file: JSON parse error: ") +
                                e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("channel file: top level must be a JSON object");
  }
  for (const auto& item : doc.items()) {
    if (item.key() != "rows" && item.key() != "name") {
      throw std::invalid_argument("channel file: unknown key '" + item.key() + "'");
    }
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::invalid_argument("channel file: required key 'rows' (array) missing");
  }
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) {
      throw std::invalid_argument("channel file: 'name' must be a string");
    }
    name = doc["name"].get<std::string>();
  }

  std::vector<Distribution> rows;
  rows.reserve(doc["rows"].size());
  std::size_t index = 0;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array() || row.empty()) {
      throw std::invalid_argument("channel file: row " + std::to_string(index) +
                                  " must be a nonempty array");
    }
    std::vector<double> values;
    values.reserve(row.size());
    for (const auto& cell : row) {
      if (!cell.is_number()) {
        throw std::invalid_argument("channel file: non-numeric entry in row " +
                                    std::to_string(index));
      }
      const double v = cell.get<double>();
      if (!std::isfinite(v)) {
        throw std::invalid_argument("channel file: non-finite entry in row " +
                                    std::to_string(index));
      }
      if (v < 0.0) {
        throw std::invalid_argument("channel file: negative entry in row " +
                                    std::to_string(index));
      }
      values.push_back(v);
    }
    if (normalize) {
      double sum = 0.0;
      for (double v : values) sum += v;
      if (sum <= 0.0) {
        throw std::invalid_argument("channel file: row " + std::to_string(index) +
                                    " has zero sum, cannot normalize");
      }
      for (double& v : values) v /= sum;
    }
    try {
      rows.emplace_back(std::move(values));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("channel file: row " + std::to_string(index) + ": " +
                                  e.what());
    }
    ++index;
  }
  return Channel(std::move(rows), std::move(name));
}

std::string serialize_channel(const Channel& channel) {
  nlohmann::json doc;
  auto& rows = doc["rows"];
  rows = nlohmann::json::array();
  for (const Distribution& r : channel.rows()) {
    rows.push_back(r.vec());
  }
  if (channel.name()) doc["name"] = *channel.name();
  return doc.dump();
}

Channel read_channel_file(const std::string& path, bool normalize) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open channel file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_channel(buf.str(), normalize);
}

bool validate_pair(const Distribution& p, const Distribution& q,
                   const Channel& channel, DivergenceKind kind) {
  if (p.size() != channel.input_size() || q.size() != channel.input_size()) {
    throw std::invalid_argument("validate_pair: dimension mismatch with channel input");
  }
  bool distinct = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p[i] - q[i]) > 1e-12) {
      distinct = true;
      break;
    }
  }
  if (!distinct) return false;
  if (infinite_on_support_violation(kind)) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0 && q[i] == 0.0) return false;
    }
  }
  return true;
}

}  // namespace sdpi
