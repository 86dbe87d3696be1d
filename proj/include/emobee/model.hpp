// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emobee/rng.hpp"

namespace emobee {

//---------------------------------------------------------------------------//
// Agent state
//---------------------------------------------------------------------------//

/// Commitment of one agent. The numeric values index per-group arrays.
enum class DecisionState : std::uint8_t { U = 0, A = 1, B = 2 };

inline constexpr std::size_t kNumStates = 3;

constexpr std::size_t index_of(DecisionState d) { return static_cast<std::size_t>(d); }

constexpr bool is_committed(DecisionState d) { return d != DecisionState::U; }

/// A <-> B, U fixed.
constexpr DecisionState swapped(DecisionState d) {
  switch (d) {
    case DecisionState::A: return DecisionState::B;
    case DecisionState::B: return DecisionState::A;
    default: return DecisionState::U;
  }
}

char to_char(DecisionState d);

/// Valence in [-1, 1], arousal in [0, 1].
struct EmotionState {
  double valence = 0.0;
  double arousal = 0.5;

  bool valid() const {
    return valence >= -1.0 && valence <= 1.0 && arousal >= 0.0 && arousal <= 1.0;
  }
  bool operator==(const EmotionState&) const = default;
};

inline constexpr EmotionState kUncommittedEmotion{0.0, 0.5};

struct Agent {
  DecisionState decision = DecisionState::U;
  EmotionState emotion = kUncommittedEmotion;
  bool operator==(const Agent&) const = default;
};

//---------------------------------------------------------------------------//
// Grid
//---------------------------------------------------------------------------//

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

/// Toroidal grid extent; both sides must be at least 3 so that the Moore
/// neighborhood holds 8 distinct cells.
struct GridDims {
  int width = 20;
  int height = 20;

  std::size_t cells() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  void validate() const;
  bool operator==(const GridDims&) const = default;
};

/// Moore neighborhood with periodic wrap, in row-major offset order
/// (-1,-1), (-1,0), (-1,1), (0,-1), (0,1), (1,-1), (1,0), (1,1).
std::array<Cell, 8> neighbors(const GridDims& dims, Cell cell);

//---------------------------------------------------------------------------//
// Parameters
//---------------------------------------------------------------------------//

/// Population-level rates and sensitivities. Defaults are the published
/// experiment settings.
struct ModelParams {
  double r0 = 0.02;
  double sigma0 = 0.02;
  double alpha_v = 0.5;
  double alpha_a = 0.5;
  double beta_v = 0.5;
  double beta_a = 0.5;
  double gamma_v = 0.1;
  double gamma_a = 0.1;

  void validate() const;
  bool operator==(const ModelParams&) const = default;
};

/// Per-group initial emotion: means plus a shared standard deviation for
/// the truncated-normal draws (sd = 0 gives fixed values).
struct GroupEmotionSpec {
  double mean_v = 0.5;
  double mean_a = 0.5;
  double sd = 0.05;

  void validate() const;
  bool operator==(const GroupEmotionSpec&) const = default;
};

/// Initial condition. Uncommitted agents always start at kUncommittedEmotion.
struct InitSpec {
  double frac_a = 0.1;
  double frac_b = 0.1;
  GroupEmotionSpec emotion_a;
  GroupEmotionSpec emotion_b;

  void validate() const;
  /// Same spec with the roles of A and B exchanged.
  InitSpec swapped() const { return {frac_b, frac_a, emotion_b, emotion_a}; }
  bool operator==(const InitSpec&) const = default;
};

//---------------------------------------------------------------------------//
// Population
//---------------------------------------------------------------------------//

struct Counts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t u = 0;

  std::size_t total() const { return a + b + u; }
  std::size_t of(DecisionState d) const;
  bool operator==(const Counts&) const = default;
};

struct Fractions {
  double phi_a = 0.0;
  double phi_b = 0.0;
  double u = 1.0;
  bool operator==(const Fractions&) const = default;
};

/// One agent per cell of a toroidal grid, stored row-major
/// (index = row * width + col) as parallel arrays so the per-step
/// reductions can run over contiguous memory.
class Population {
 public:
  /// All agents uncommitted with the neutral emotion.
  explicit Population(GridDims dims);

  const GridDims& dims() const { return dims_; }
  std::size_t size() const { return decisions_.size(); }

  std::size_t index(Cell c) const;
  Cell cell(std::size_t index) const;

  /// Flat index of neighbor k (0..7) of agent i, same order as neighbors().
  std::size_t neighbor(std::size_t i, unsigned k) const;

  DecisionState decision(std::size_t i) const {
    return static_cast<DecisionState>(decisions_[i]);
  }
  EmotionState emotion(std::size_t i) const { return {valence_[i], arousal_[i]}; }
  Agent agent(std::size_t i) const { return {decision(i), emotion(i)}; }

  void set_decision(std::size_t i, DecisionState d);
  /// Throws DomainError if the emotion is out of range.
  void set_emotion(std::size_t i, EmotionState e);

  const Counts& counts() const { return counts_; }
  Counts recount() const;

  std::span<const std::uint8_t> decision_codes() const { return decisions_; }
  std::span<const double> valences() const { return valence_; }
  std::span<const double> arousals() const { return arousal_; }

  /// Text dump: one line per row, 'A', 'B' or '.' per cell.
  std::string dump() const;

  bool operator==(const Population&) const = default;

 private:
  GridDims dims_;
  std::vector<std::uint8_t> decisions_;
  std::vector<double> valence_;
  std::vector<double> arousal_;
  Counts counts_;
};

Fractions fractions(const Counts& counts);
inline Fractions fractions(const Population& pop) { return fractions(pop.counts()); }

/// Copy with every A agent relabeled B and vice versa; emotions untouched.
Population mirrored(const Population& pop);

/// Rejection sampling from N(mean, sd) restricted to [lo, hi]. Gives up after
/// 1000 attempts and returns the clamped mean. sd = 0 consumes no randomness.
double sample_truncated_normal(double mean, double sd, double lo, double hi, Rng& rng);

/// round(frac_a * N) A agents and round(frac_b * N) B agents on uniformly
/// random distinct cells (B trimmed if the sum exceeds N).
Population init_population(const GridDims& dims, const InitSpec& spec, Rng& rng);

}  // namespace emobee
