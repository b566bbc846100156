#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace wfpr {

/// Seeded random stream. Distinct (master_seed, stream_id) pairs give
/// independent reproducible sequences; equal pairs replay bit-for-bit on
/// one build. All samplers are hand-rolled on top of the raw engine so the
/// draw count per call is fixed and documented.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  /// Uniform double in [0, 1). Consumes one engine word.
  double uniform();

  /// Standard normal via Box-Muller. Consumes two engine words.
  double normal();

  /// CN(0,1): real and imaginary parts each N(0, 1/2). Two engine words.
  std::complex<double> complex_gaussian();

  std::uint64_t next_u64();

  /// Unbiased integer in [0, bound). bound must be >= 1.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Child stream; substream ids are mixed into this stream's id, so
  /// substream(a).substream(b) != substream(b).substream(a).
  RngStream substream(std::uint64_t id) const;

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// 64-bit digest of (master_seed, stream_id); stored as ensemble metadata.
  std::uint64_t fingerprint() const;

 private:
  std::mt19937_64 engine_;
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
};

/// Exact Poisson(lambda) draw: inversion by sequential search for
/// lambda < 10, Hormann's transformed rejection (PTRS) for lambda >= 10.
/// Throws std::invalid_argument for negative or non-finite lambda.
std::uint64_t sample_poisson(double lambda, RngStream& rng);

}  // namespace wfpr
