/**
 * sdpi - contraction coefficients of finite discrete channels
 *
 * Copyright (c) 2026 the sdpi authors
 *
 * Released under the Apache License Version 2.0
 * http://www.apache.org/licenses/
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdpi/distribution.hpp"
#include "sdpi/divergence.hpp"

namespace sdpi {

/// Row-stochastic matrix over finite alphabets. Row x is the output
/// distribution given input letter x. Immutable after construction.
class Channel {
 public:
  /// Throws std::invalid_argument when rows is empty or rows differ in length.
  explicit Channel(std::vector<Distribution> rows,
                   std::optional<std::string> name = std::nullopt);

  std::size_t input_size() const noexcept { return rows_.size(); }
  std::size_t output_size() const noexcept { return rows_.front().size(); }
  const Distribution& row(std::size_t x) const noexcept { return rows_[x]; }
  const std::vector<Distribution>& rows() const noexcept { return rows_; }
  const std::optional<std::string>& name() const noexcept { return name_; }

  /// Output distribution induced by the input distribution, as a raw vector:
  /// out[y] = sum_x input[x] * row(x)[y]. Throws on length mismatch.
  std::vector<double> push_forward(std::span<const double> input) const;

 private:
  std::vector<Distribution> rows_;
  std::optional<std::string> name_;
};

/// Parses the channel file format: a UTF-8 JSON object with required key
/// "rows" (array of arrays of finite numbers) and optional key "name"
/// (string); no other keys. With normalize set, each row is divided by its
/// sum before validation (a zero row sum is an error); without it, row sums
/// must already be 1 within kProbSumTol.
///
/// Throws std::invalid_argument with a descriptive message on malformed
/// syntax, unknown keys, ragged rows, non-finite or negative entries, or
/// row-sum violations.
Channel parse_channel(std::string_view text, bool normalize = false);

/// Serializes back to the channel file format. Numbers are emitted as
/// shortest round-trip decimals, so parse(serialize(c)) reproduces c exactly.
std::string serialize_channel(const Channel& channel);

/// Reads and parses a channel file. Throws std::invalid_argument when the
/// file cannot be read or does not parse.
Channel read_channel_file(const std::string& path, bool normalize = false);

/// True iff the pair (p, q) is admissible for the contraction ratio under
/// the given divergence: p differs from q (some entry by more than 1e-12)
/// and, for divergences with infinite slope at infinity (KL, Chi2), the
/// support of p is contained in the support of q. Throws on a length
/// mismatch with the channel input alphabet.
bool validate_pair(const Distribution& p, const Distribution& q,
                   const Channel& channel, DivergenceKind kind);

}  // namespace sdpi
