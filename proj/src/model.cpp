// SPDX-License-Identifier: Apache-2.0
#include "emobee/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emobee/error.hpp"

namespace emobee {

namespace {

int wrap(int x, int n) { return ((x % n) + n) % n; }

constexpr std::array<std::array<int, 2>, 8> kMooreOffsets{{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1},
}};

void require_fraction(double f, const char* name) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

char to_char(DecisionState d) {
  switch (d) {
    case DecisionState::A: return 'A';
    case DecisionState::B: return 'B';
    default: return '.';
  }
}

void GridDims::validate() const {
  if (width < 3 || height < 3) {
    throw DomainError("grid must be at least 3x3, got " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
}

std::array<Cell, 8> neighbors(const GridDims& dims, Cell cell) {
  dims.validate();
  if (cell.row < 0 || cell.row >= dims.height || cell.col < 0 || cell.col >= dims.width) {
    throw DomainError("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                      ") outside grid");
  }
  std::array<Cell, 8> out;
  for (std::size_t k = 0; k < 8; ++k) {
    out[k] = {wrap(cell.row + kMooreOffsets[k][0], dims.height),
              wrap(cell.col + kMooreOffsets[k][1], dims.width)};
  }
  return out;
}

void ModelParams::validate() const {
  if (!(r0 >= 0.0)) throw DomainError("r0 must be >= 0");
  if (!(sigma0 >= 0.0)) throw DomainError("sigma0 must be >= 0");
  require_fraction(gamma_v, "gamma_v");
  require_fraction(gamma_a, "gamma_a");
  for (double s : {alpha_v, alpha_a, beta_v, beta_a}) {
    if (!std::isfinite(s)) throw DomainError("sensitivities must be finite");
  }
}

void GroupEmotionSpec::validate() const {
  if (!(mean_v >= -1.0 && mean_v <= 1.0)) throw DomainError("mean valence must lie in [-1, 1]");
  if (!(mean_a >= 0.0 && mean_a <= 1.0)) throw DomainError("mean arousal must lie in [0, 1]");
  if (!(sd >= 0.0) || !std::isfinite(sd)) throw DomainError("emotion sd must be >= 0");
}

void InitSpec::validate() const {
  require_fraction(frac_a, "frac_a");
  require_fraction(frac_b, "frac_b");
  if (frac_a + frac_b > 1.0) throw DomainError("frac_a + frac_b must not exceed 1");
  emotion_a.validate();
  emotion_b.validate();
}

std::size_t Counts::of(DecisionState d) const {
  switch (d) {
    case DecisionState::A: return a;
    case DecisionState::B: return b;
    default: return u;
  }
}

Population::Population(GridDims dims)
    : dims_((dims.validate(), dims)),
      decisions_(dims.cells(), static_cast<std::uint8_t>(DecisionState::U)),
      valence_(dims.cells(), kUncommittedEmotion.valence),
      arousal_(dims.cells(), kUncommittedEmotion.arousal),
      counts_{0, 0, dims.cells()} {}

std::size_t Population::index(Cell c) const {
  return static_cast<std::size_t>(c.row) * static_cast<std::size_t>(dims_.width) +
         static_cast<std::size_t>(c.col);
}

Cell Population::cell(std::size_t i) const {
  const auto w = static_cast<std::size_t>(dims_.width);
  return {static_cast<int>(i / w), static_cast<int>(i % w)};
}

std::size_t Population::neighbor(std::size_t i, unsigned k) const {
  const int w = dims_.width;
  const int h = dims_.height;
  const int row = static_cast<int>(i / static_cast<std::size_t>(w));
  const int col = static_cast<int>(i % static_cast<std::size_t>(w));
  int r = row + kMooreOffsets[k][0];
  int c = col + kMooreOffsets[k][1];
  if (r < 0) r += h; else if (r >= h) r -= h;
  if (c < 0) c += w; else if (c >= w) c -= w;
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(w) + static_cast<std::size_t>(c);
}

void Population::set_decision(std::size_t i, DecisionState d) {
  const DecisionState old = decision(i);
  if (old == d) return;
  auto slot = [this](DecisionState s) -> std::size_t& {
    switch (s) {
      case DecisionState::A: return counts_.a;
      case DecisionState::B: return counts_.b;
      default: return counts_.u;
    }
  };
  --slot(old);
  ++slot(d);
  decisions_[i] = static_cast<std::uint8_t>(d);
}

void Population::set_emotion(std::size_t i, EmotionState e) {
  if (!e.valid()) throw DomainError("emotion out of range");
  valence_[i] = e.valence;
  arousal_[i] = e.arousal;
}

Counts Population::recount() const {
  Counts c;
  for (auto code : decisions_) {
    switch (static_cast<DecisionState>(code)) {
      case DecisionState::A: ++c.a; break;
      case DecisionState::B: ++c.b; break;
      default: ++c.u; break;
    }
  }
  return c;
}

std::string Population::dump() const {
  std::string out;
  out.reserve(size() + static_cast<std::size_t>(dims_.height));
  for (std::size_t i = 0; i < size(); ++i) {
    out.push_back(to_char(decision(i)));
    if ((i + 1) % static_cast<std::size_t>(dims_.width) == 0) out.push_back('\n');
  }
  return out;
}

Fractions fractions(const Counts& counts) {
  const auto n = static_cast<double>(counts.total());
  return {static_cast<double>(counts.a) / n, static_cast<double>(counts.b) / n,
          static_cast<double>(counts.u) / n};
}

Population mirrored(const Population& pop) {
  Population out = pop;
  for (std::size_t i = 0; i < out.size(); ++i) out.set_decision(i, swapped(pop.decision(i)));
  return out;
}

double sample_truncated_normal(double mean, double sd, double lo, double hi, Rng& rng) {
  if (!(lo < hi)) throw DomainError("truncated normal needs lo < hi");
  if (!(sd >= 0.0)) throw DomainError("truncated normal needs sd >= 0");
  if (sd == 0.0) return std::clamp(mean, lo, hi);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double x = mean + sd * rng.normal();
    if (x >= lo && x <= hi) return x;
  }
  return std::clamp(mean, lo, hi);
}

Population init_population(const GridDims& dims, const InitSpec& spec, Rng& rng) {
  spec.validate();
  Population pop(dims);
  const std::size_t n = pop.size();
  const auto n_a = static_cast<std::size_t>(std::llround(spec.frac_a * static_cast<double>(n)));
  auto n_b = static_cast<std::size_t>(std::llround(spec.frac_b * static_cast<double>(n)));
  if (n_a + n_b > n) n_b = n - n_a;

  // Partial Fisher-Yates: the first n_a + n_b slots are a uniform sample of
  // distinct cells.
  std::vector<std::uint32_t> cells(n);
  std::iota(cells.begin(), cells.end(), 0u);
  for (std::size_t k = 0; k < n_a + n_b; ++k) {
    const std::size_t j = k + rng.below(static_cast<std::uint32_t>(n - k));
    std::swap(cells[k], cells[j]);
  }
  for (std::size_t k = 0; k < n_a; ++k) pop.set_decision(cells[k], DecisionState::A);
  for (std::size_t k = n_a; k < n_a + n_b; ++k) pop.set_decision(cells[k], DecisionState::B);

  // Emotions in row-major order so the draw sequence is independent of labels.
  for (std::size_t i = 0; i < n; ++i) {
    const DecisionState d = pop.decision(i);
    if (!is_committed(d)) continue;
    const GroupEmotionSpec& g = d == DecisionState::A ? spec.emotion_a : spec.emotion_b;
    const double v = sample_truncated_normal(g.mean_v, g.sd, -1.0, 1.0, rng);
    const double a = sample_truncated_normal(g.mean_a, g.sd, 0.0, 1.0, rng);
    pop.set_emotion(i, {v, a});
  }
  return pop;
}

}  // namespace emobee
