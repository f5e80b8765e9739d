#pragma once

#include "simplicode/bigint.hpp"
#include "simplicode/field.hpp"
#include "simplicode/geometry.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace simplicode {

/// m x n generator matrix; column j is the j-th defining-set point.
class GeneratorMatrix {
 public:
  GeneratorMatrix(std::uint32_t q, int m, std::size_t n);

  std::uint32_t q() const { return q_; }
  int m() const { return m_; }
  std::size_t n() const { return n_; }

  Element at(int row, std::size_t col) const { return entries_[row * n_ + col]; }
  void set(int row, std::size_t col, Element value) { entries_[row * n_ + col] = value; }
  std::span<const Element> row(int r) const {
    return std::span<const Element>(entries_).subspan(r * n_, n_);
  }
  Vector column(std::size_t col) const;

 private:
  std::uint32_t q_;
  int m_;
  std::size_t n_;
  std::vector<Element> entries_;  // row-major
};

struct CodeParameters {
  std::uint32_t q = 0;
  std::int64_t n = 0;
  int k = 0;
  std::int64_t d = 0;

  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

/// Weight -> number of codewords of that weight.
class WeightDistribution {
 public:
  using Map = std::map<std::int64_t, BigInt>;

  WeightDistribution() = default;
  explicit WeightDistribution(Map counts);

  /// Adds multiplicity to weight w; zero multiplicities are not stored.
  void add(std::int64_t w, const BigInt& multiplicity);

  const Map& counts() const { return counts_; }
  BigInt count(std::int64_t w) const;
  BigInt total() const;
  /// Number of distinct nonzero weights that occur.
  std::size_t distinct_nonzero() const;
  /// Smallest nonzero weight, or 0 if there is none.
  std::int64_t min_nonzero() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  Map counts_;
};

struct Spectrum {
  CodeParameters params;
  WeightDistribution distribution;
};

/// Largest m * log2(q) accepted by the exhaustive enumeration.
inline constexpr double kMaxBruteForceBits = 40.0;

GeneratorMatrix build_generator(const DefiningSet& set);

/// Weights of all q^m codewords a -> (a . x)_{x in D}. The dimension is
/// m - log_q of the kernel size. Throws GuardError when m*log2(q) > 40.
Spectrum brute_force_spectrum(const GeneratorMatrix& gen, const FieldSpec& field);

/// t = 2: no zero column. t = 3: additionally no column is a scalar multiple
/// of another (the code is projective). Other t throw InvalidArgument.
bool dual_distance_at_least(const GeneratorMatrix& gen, const FieldSpec& field, int t);

}  // namespace simplicode
