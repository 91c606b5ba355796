#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homkit/hom_complex.hpp"

namespace homkit {

using BigInt = boost::multiprecision::cpp_int;

// Column-major sparse integer matrix; entries[c] lists (row, coefficient).
struct SparseIntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> entries;
};

/// Cellular chain complex with deterministically ordered bases: cells of each
/// dimension sorted lexicographically on assignments.
struct ChainComplex {
  std::vector<std::vector<MultiHom>> bases;  // per dimension 0..dim
  std::vector<SparseIntMat> boundaries;      // boundaries[k]: C_k -> C_(k-1); [0] empty
  bool nonempty() const { return !bases.empty() && !bases[0].empty(); }
};

ChainComplex chain_complex(const CellComplex& c);

// Throws verification_error when some composite boundary is nonzero.
void check_boundary_squares_to_zero(const std::vector<SparseIntMat>& boundaries);

struct SnfResult {
  std::vector<BigInt> factors;  // positive, d1 | d2 | ... | dr
  int rank = 0;                 // number of invariant factors
};

SnfResult smith_normal_form(const SparseIntMat& m);
SnfResult smith_normal_form(const std::vector<std::vector<long long>>& dense);

struct HomologyReport {
  bool nonempty = false;
  std::vector<long long> betti;                     // reduced Betti numbers per dim
  std::vector<std::vector<std::uint64_t>> torsion;  // invariant factors > 1 per dim

  int max_dim() const { return static_cast<int>(betti.size()) - 1; }
  long long betti_at(int k) const;
  const std::vector<std::uint64_t>& torsion_at(int k) const;
  bool trivial_at(int k) const { return betti_at(k) == 0 && torsion_at(k).empty(); }
  // nonempty and all reduced homology zero
  bool all_trivial() const;
};

// Equality up to trailing trivial dimensions.
bool operator==(const HomologyReport& a, const HomologyReport& b);

// Reduced integral homology via Smith normal forms of the boundary matrices.
// Checks ∂∂ = 0 first and throws verification_error when it fails.
HomologyReport reduced_homology(const ChainComplex& cc);

// Shared pipeline for any complex presented as ranked bases plus boundaries.
HomologyReport homology_from_boundaries(const std::vector<std::size_t>& counts,
                                        const std::vector<SparseIntMat>& boundaries,
                                        bool nonempty);

constexpr int kLevelEmpty = -2;
constexpr int kLevelInfinite = std::numeric_limits<int>::max();

// Homological connectivity: -2 empty, -1 nonempty, k >= 0 when all reduced
// homology vanishes through dimension k. kLevelInfinite when everything
// vanishes. Certified homologically only.
struct ConnectivityVerdict {
  int level = kLevelEmpty;
  bool infinite() const { return level == kLevelInfinite; }
  static constexpr const char* certified = "homological";
};

ConnectivityVerdict homological_connectivity(const HomologyReport& r, bool nonempty);

// Independent verification channel: simplicial homology of the order complex
// of the face poset (chains of cells under strict pointwise inclusion).
HomologyReport order_complex_oracle(const CellComplex& c);

long long euler_characteristic_cells(const CellComplex& c);
long long euler_characteristic_betti(const HomologyReport& r);

}  // namespace homkit
