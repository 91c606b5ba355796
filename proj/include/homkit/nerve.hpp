#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homkit/chain.hpp"
#include "homkit/hom_complex.hpp"

namespace homkit {

struct NervePiece {
  VertexMask set;
  CellComplex complex;
};

/// Cover of Hom(G,K_n) by the subcomplexes indexed by the maximal independent
/// sets, plus one complex per distinct intersection of two or more members
/// (keyed by the intersected vertex set, which determines the complex).
struct NerveDecomposition {
  Graph g;
  int n = 0;
  std::vector<NervePiece> family;         // indexed by maximal independent sets
  std::vector<NervePiece> intersections;  // distinct meet-semilattice values
};

NerveDecomposition nerve_cover(const Graph& g, int n,
                               std::size_t cell_cap = kDefaultCellCap);

struct PieceVerdict {
  VertexMask set;
  std::size_t cells = 0;
  ConnectivityVerdict verdict;
};

struct NerveCheck {
  int m = 0;
  bool satisfied = false;
  std::vector<PieceVerdict> pieces;
  std::vector<PieceVerdict> intersections;
};

// True iff every family member is homologically >= m-connected and every
// distinct intersection of two or more members is >= (m-1)-connected.
NerveCheck check_nerve_hypotheses(const NerveDecomposition& d, int m);

enum class VerifyMode { Direct, Inductive };

struct PieceComparison {
  VertexMask set;
  std::size_t cells = 0;
  ConnectivityVerdict verdict;
  // reduced homology equals that of Hom on the carrier minus the set, one
  // color fewer
  bool matches_reduction = false;
};

struct TheoremReport {
  Graph g;
  int n = 0;
  int chi_dot_value = 0;
  int max_degree_value = 0;
  int claimed_level = 0;    // n - chi_dot - 1
  int corollary_level = 0;  // n - max_degree - 2
  std::size_t cells_total = 0;
  ConnectivityVerdict verdict;
  VerifyMode mode = VerifyMode::Direct;
  int nerve_m = 0;  // m used for the hypothesis check (inductive mode)
  std::vector<PieceComparison> pieces;
  std::vector<PieceComparison> intersections;
  bool nerve_hypotheses_satisfied = false;  // meaningful in inductive mode

  bool connectivity_pass() const { return verdict.level >= claimed_level; }
  bool corollary_pass() const { return verdict.level >= corollary_level; }
  bool pass() const;
};

// Certifies the connectivity bound homologically. Direct mode compares the
// complex's connectivity with n - chi_dot - 1. Inductive mode additionally
// matches every cover piece and distinct intersection against the Hom complex
// of the reduced graph with one color fewer and checks the nerve hypotheses
// at the claimed level (or at m_override).
TheoremReport verify_theorem(const Graph& g, int n, VerifyMode mode,
                             std::size_t cell_cap = kDefaultCellCap,
                             std::optional<int> m_override = std::nullopt);

}  // namespace homkit
