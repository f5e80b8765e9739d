#include "simplicode/codes.hpp"

#include "simplicode/errors.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>

namespace simplicode {

GeneratorMatrix::GeneratorMatrix(std::uint32_t q, int m, std::size_t n)
    : q_(q), m_(m), n_(n), entries_(static_cast<std::size_t>(m) * n, Element{0}) {}

Vector GeneratorMatrix::column(std::size_t col) const {
  Vector v(m_);
  for (int i = 0; i < m_; ++i) v[i] = at(i, col);
  return v;
}

WeightDistribution::WeightDistribution(Map counts) {
  for (auto& [w, c] : counts) add(w, c);
}

void WeightDistribution::add(std::int64_t w, const BigInt& multiplicity) {
  if (multiplicity == 0) return;
  auto& slot = counts_[w];
  slot += multiplicity;
  if (slot == 0) counts_.erase(w);
}

BigInt WeightDistribution::count(std::int64_t w) const {
  auto it = counts_.find(w);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, c] : counts_) t += c;
  return t;
}

std::size_t WeightDistribution::distinct_nonzero() const {
  return counts_.size() - (counts_.count(0) ? 1 : 0);
}

std::int64_t WeightDistribution::min_nonzero() const {
  for (const auto& [w, c] : counts_)
    if (w > 0) return w;
  return 0;
}

GeneratorMatrix build_generator(const DefiningSet& set) {
  if (set.empty()) throw InvalidArgument("defining set is empty");
  GeneratorMatrix gen(set.q(), set.m(), set.size());
  for (std::size_t j = 0; j < set.size(); ++j) {
    const auto pt = set.point(j);
    for (int i = 0; i < set.m(); ++i) gen.set(i, j, pt[i]);
  }
  return gen;
}

namespace {

// Messages are walked as an odometer over the m*e base-p digits of a; bumping
// digit (i, j) by one adds x^j times row i to the running codeword, and a
// wrap from p-1 to 0 is the same addition since p * row = 0.
struct DigitRows {
  int digits = 0;
  std::uint32_t p = 0;
};

std::vector<std::uint64_t> tally_char2(const GeneratorMatrix& gen, const FieldSpec& field) {
  const unsigned e = field.e();
  const std::size_t n = gen.n();
  const std::size_t words = (n + 63) / 64;
  const int digits = gen.m() * static_cast<int>(e);

  // planes[d][b] : bit plane b of x^j * row_i, d = i*e + j
  std::vector<std::vector<std::uint64_t>> scaled(digits, std::vector<std::uint64_t>(e * words, 0));
  for (int i = 0; i < gen.m(); ++i) {
    for (unsigned j = 0; j < e; ++j) {
      auto& planes = scaled[i * e + j];
      const Element factor = field.basis(j);
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t v = field.mul(factor, gen.at(i, c)).index;
        for (unsigned b = 0; b < e; ++b)
          if (v >> b & 1) planes[b * words + c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
  }

  std::vector<std::uint64_t> tally(n + 1, 0);
  std::vector<std::uint64_t> codeword(e * words, 0);
  std::vector<std::uint8_t> digit(digits, 0);
  tally[0] = 1;
  for (;;) {
    int d = 0;
    for (; d < digits; ++d) {
      const auto& row = scaled[d];
      for (std::size_t w = 0; w < e * words; ++w) codeword[w] ^= row[w];
      if (digit[d] == 0) {
        digit[d] = 1;
        break;
      }
      digit[d] = 0;
    }
    if (d == digits) break;
    std::size_t weight = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t any = 0;
      for (unsigned b = 0; b < e; ++b) any |= codeword[b * words + w];
      weight += std::popcount(any);
    }
    ++tally[weight];
  }
  return tally;
}

std::vector<std::uint64_t> tally_odd(const GeneratorMatrix& gen, const FieldSpec& field) {
  const unsigned e = field.e();
  const std::uint32_t p = field.p();
  const std::uint32_t q = field.q();
  const std::size_t n = gen.n();
  const int digits = gen.m() * static_cast<int>(e);

  std::vector<std::vector<std::uint32_t>> scaled(digits, std::vector<std::uint32_t>(n));
  for (int i = 0; i < gen.m(); ++i)
    for (unsigned j = 0; j < e; ++j)
      for (std::size_t c = 0; c < n; ++c)
        scaled[i * e + j][c] = field.mul(field.basis(j), gen.at(i, c)).index;

  std::vector<std::uint32_t> add_table;
  const bool tabled = q <= 256;
  if (tabled) {
    add_table.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        add_table[a * q + b] = field.add(Element{a}, Element{b}).index;
  }

  std::vector<std::uint64_t> tally(n + 1, 0);
  std::vector<std::uint32_t> codeword(n, 0);
  std::vector<std::uint32_t> digit(digits, 0);
  std::int64_t weight = 0;
  tally[0] = 1;
  for (;;) {
    int d = 0;
    for (; d < digits; ++d) {
      const auto& row = scaled[d];
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t old = codeword[c];
        const std::uint32_t now =
            tabled ? add_table[old * q + row[c]] : field.add(Element{old}, Element{row[c]}).index;
        codeword[c] = now;
        weight += static_cast<std::int64_t>(now != 0) - static_cast<std::int64_t>(old != 0);
      }
      if (++digit[d] < p) break;
      digit[d] = 0;
    }
    if (d == digits) break;
    ++tally[weight];
  }
  return tally;
}

}  // namespace

Spectrum brute_force_spectrum(const GeneratorMatrix& gen, const FieldSpec& field) {
  if (gen.q() != field.q()) throw InvalidArgument("generator matrix and field disagree on q");
  const double bits = gen.m() * std::log2(static_cast<double>(field.q()));
  if (bits > kMaxBruteForceBits)
    throw GuardError("exhaustive enumeration needs m*log2(q) <= 40 (got " + std::to_string(bits) +
                     "); use a closed-form method");

  const auto tally = field.p() == 2 ? tally_char2(gen, field) : tally_odd(gen, field);

  // kernel size must be q^(m-k)
  const std::uint64_t kernel = tally[0];
  std::uint64_t rest = kernel;
  int kernel_dim = 0;
  while (rest % field.q() == 0 && rest > 1) {
    rest /= field.q();
    ++kernel_dim;
  }
  if (rest != 1) throw ConsistencyError("kernel size is not a power of q");

  // every codeword is hit by exactly |kernel| messages
  Spectrum out;
  for (std::size_t w = 0; w < tally.size(); ++w) {
    if (tally[w] % kernel != 0) throw ConsistencyError("weight tally not divisible by the kernel size");
    out.distribution.add(static_cast<std::int64_t>(w), tally[w] / kernel);
  }

  out.params.q = field.q();
  out.params.n = static_cast<std::int64_t>(gen.n());
  out.params.k = gen.m() - kernel_dim;
  out.params.d = out.distribution.min_nonzero();
  return out;
}

bool dual_distance_at_least(const GeneratorMatrix& gen, const FieldSpec& field, int t) {
  if (t != 2 && t != 3) throw InvalidArgument("dual distance check supports t = 2 or 3 only");
  std::set<Vector> seen;
  for (std::size_t c = 0; c < gen.n(); ++c) {
    Vector col = gen.column(c);
    const Element* lead = nullptr;
    for (const Element& x : col)
      if (!x.is_zero()) {
        lead = &x;
        break;
      }
    if (lead == nullptr) return false;
    if (t == 2) continue;
    const Element scale = field.inv(*lead);
    for (Element& x : col) x = field.mul(scale, x);
    if (!seen.insert(std::move(col)).second) return false;
  }
  return true;
}

}  // namespace simplicode
