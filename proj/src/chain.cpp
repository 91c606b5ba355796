#include "homkit/chain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace homkit {

ChainComplex chain_complex(const CellComplex& c) {
  ChainComplex cc;
  int dim = c.dim();
  if (dim < 0) return cc;
  cc.bases.assign(dim + 1, {});
  for (const MultiHom& cell : c.cells) cc.bases[cell_dim(cell)].push_back(cell);
  // c.cells is (dim, lex)-sorted, so each basis is already lex-sorted

  std::vector<std::unordered_map<MultiHom, int, MultiHomHash>> index(dim + 1);
  for (int k = 0; k <= dim; ++k)
    for (std::size_t j = 0; j < cc.bases[k].size(); ++j)
      index[k].emplace(cc.bases[k][j], static_cast<int>(j));

  cc.boundaries.assign(dim + 1, {});
  for (int k = 1; k <= dim; ++k) {
    SparseIntMat& m = cc.boundaries[k];
    m.rows = static_cast<int>(cc.bases[k - 1].size());
    m.cols = static_cast<int>(cc.bases[k].size());
    m.entries.assign(m.cols, {});
    for (int j = 0; j < m.cols; ++j) {
      for (auto& [face, sign] : codim1_faces(cc.bases[k][j])) {
        auto it = index[k - 1].find(face);
        if (it == index[k - 1].end())
          throw verification_error("chain_complex: complex is not face-closed");
        m.entries[j].emplace_back(it->second, sign);
      }
      std::sort(m.entries[j].begin(), m.entries[j].end());
    }
  }
  return cc;
}

void check_boundary_squares_to_zero(const std::vector<SparseIntMat>& boundaries) {
  std::vector<std::pair<int, long long>> acc;
  for (std::size_t k = 2; k < boundaries.size(); ++k) {
    const SparseIntMat& hi = boundaries[k];
    const SparseIntMat& lo = boundaries[k - 1];
    for (int j = 0; j < hi.cols; ++j) {
      acc.clear();
      for (auto [mid, s1] : hi.entries[j])
        for (auto [row, s2] : lo.entries[mid])
          acc.emplace_back(row, static_cast<long long>(s1) * s2);
      std::sort(acc.begin(), acc.end());
      for (std::size_t i = 0; i < acc.size();) {
        long long sum = 0;
        std::size_t i0 = i;
        while (i < acc.size() && acc[i].first == acc[i0].first) sum += acc[i++].second;
        if (sum != 0)
          throw verification_error("boundary composite is nonzero at dimension " +
                                   std::to_string(k) + ", column " + std::to_string(j));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Smith normal form: sparse elimination, min-fill-flavored pivoting. Runs with
// 64-bit coefficients first and retries with arbitrary precision on overflow.
// ---------------------------------------------------------------------------

namespace {

struct overflow_signal {};

inline long long chk_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_signal{};
  return r;
}
inline long long chk_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_signal{};
  return r;
}
inline BigInt chk_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt chk_add(const BigInt& a, const BigInt& b) { return a + b; }

template <typename T>
T abs_of(const T& v) {
  return v < 0 ? T(-v) : v;
}

// Sparse row-major elimination. Rows are sorted (column, value) vectors;
// column indexes and the nnz bucket queue tolerate stale ids and revalidate
// on use. Pivots favor short rows and unit entries, which keeps fill low on
// boundary matrices.
template <typename T>
class SparseElim {
 public:
  explicit SparseElim(const SparseIntMat& m) : nrows_(m.rows) {
    rows_.resize(nrows_);
    col_rows_.resize(m.cols);
    alive_.assign(nrows_, 1);
    std::vector<int> per_row(nrows_, 0);
    for (int c = 0; c < m.cols; ++c)
      for (auto [r, v] : m.entries[c])
        if (v != 0) ++per_row[r];
    for (int r = 0; r < nrows_; ++r) rows_[r].reserve(per_row[r]);
    for (int c = 0; c < m.cols; ++c)
      for (auto [r, v] : m.entries[c]) {
        if (v == 0) continue;
        rows_[r].emplace_back(c, T(v));
        col_rows_[c].push_back(r);
      }
    for (int r = 0; r < nrows_; ++r) {
      std::sort(rows_[r].begin(), rows_[r].end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      push_bucket(r);
    }
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> diag;
    for (int pr = pop_min_row(); pr >= 0; pr = pop_min_row()) {
      int pc = choose_col(pr);
      auto [fr, fc] = eliminate(pr, pc);
      diag.push_back(BigInt(abs_of(*value_at(fr, fc))));
      alive_[fr] = 0;
      rows_[fr].clear();
      rows_[fr].shrink_to_fit();
    }
    return diag;
  }

 private:
  int nrows_;
  std::vector<std::vector<std::pair<int, T>>> rows_;  // sorted by column
  std::vector<std::vector<int>> col_rows_;            // stale ids allowed
  std::vector<std::vector<int>> buckets_;             // by (possibly stale) nnz
  std::vector<char> alive_;

  void push_bucket(int r) {
    std::size_t k = rows_[r].size();
    if (k == 0 || !alive_[r]) return;
    if (buckets_.size() <= k) buckets_.resize(k + 1);
    buckets_[k].push_back(r);
  }

  // smallest live row by current nnz; stale bucket entries are recycled
  int pop_min_row() {
    for (std::size_t k = 1; k < buckets_.size(); ++k)
      while (!buckets_[k].empty()) {
        int r = buckets_[k].back();
        buckets_[k].pop_back();
        if (!alive_[r] || rows_[r].empty()) continue;
        if (rows_[r].size() == k) return r;
        if (rows_[r].size() > k) push_bucket(r);
        // smaller than k: it was pushed into a lower bucket too; skip
      }
    // anything left was only reachable through lower stale buckets
    for (int r = 0; r < nrows_; ++r)
      if (alive_[r] && !rows_[r].empty()) return r;
    return -1;
  }

  T* value_at(int r, int c) {
    auto it = std::lower_bound(rows_[r].begin(), rows_[r].end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it == rows_[r].end() || it->first != c) return nullptr;
    return &it->second;
  }

  int choose_col(int r) {
    int best = -1;
    T best_abs{};
    std::size_t best_cnnz = 0;
    for (auto& [c, v] : rows_[r]) {
      T a = abs_of(v);
      std::size_t cn = col_rows_[c].size();
      if (best < 0 || a < best_abs || (a == best_abs && cn < best_cnnz)) {
        best = c;
        best_abs = a;
        best_cnnz = cn;
      }
    }
    return best;
  }

  // dst += factor * src, merging sorted rows; registers new columns
  void row_axpy(int dst, int src, const T& factor) {
    std::vector<std::pair<int, T>> merged;
    merged.reserve(rows_[dst].size() + rows_[src].size());
    auto a = rows_[dst].begin(), ae = rows_[dst].end();
    auto b = rows_[src].begin(), be = rows_[src].end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        T v = chk_mul(factor, b->second);
        if (v != 0) {
          merged.emplace_back(b->first, v);
          col_rows_[b->first].push_back(dst);
        }
        ++b;
      } else {
        T v = chk_add(a->second, chk_mul(factor, b->second));
        if (v != 0) merged.emplace_back(a->first, v);
        ++a;
        ++b;
      }
    }
    rows_[dst] = std::move(merged);
    push_bucket(dst);
  }

  // Clears the pivot's column and row, migrating the pivot while euclidean
  // remainders appear. Returns the final pivot position, alone in its row
  // and column.
  std::pair<int, int> eliminate(int pr, int pc) {
    while (true) {
      T p = *value_at(pr, pc);
      bool moved = false;
      std::vector<int> carriers;
      carriers.swap(col_rows_[pc]);
      for (std::size_t idx = 0; idx < carriers.size(); ++idx) {
        int r = carriers[idx];
        if (r == pr || !alive_[r]) continue;
        T* slot = value_at(r, pc);
        if (slot == nullptr) continue;  // stale
        T q = *slot / p;                // truncated: |remainder| < |p|
        if (q != 0) row_axpy(r, pr, T(-q));
        if (value_at(r, pc) != nullptr) {
          // remainder strictly smaller than |p|: move the pivot there and
          // requeue the untouched carriers
          for (std::size_t rest = idx; rest < carriers.size(); ++rest)
            col_rows_[pc].push_back(carriers[rest]);
          col_rows_[pc].push_back(pr);
          pr = r;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      col_rows_[pc].clear();
      col_rows_[pc].push_back(pr);
      // column now holds the pivot only; clearing the row is a column
      // operation that touches the pivot row alone
      int move_to = -1;
      std::vector<std::pair<int, T>> kept;
      kept.reserve(1);
      for (auto& [c, v] : rows_[pr]) {
        if (c == pc) {
          kept.emplace_back(c, v);
          continue;
        }
        T rem = v % p;
        if (rem != 0) {
          kept.emplace_back(c, rem);
          if (move_to < 0) move_to = c;
        }
      }
      rows_[pr] = std::move(kept);
      if (move_to < 0) return {pr, pc};
      pc = move_to;  // smaller pivot appears in this row
    }
  }
};

std::vector<BigInt> chain_normalize(std::vector<BigInt> diag) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j)
        if (diag[j] % diag[i] != 0) {
          BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
          BigInt l = diag[i] / g * diag[j];
          diag[i] = g;
          diag[j] = l;
          changed = true;
        }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMat& m) {
  std::vector<BigInt> diag;
  try {
    diag = SparseElim<long long>(m).run();
  } catch (const overflow_signal&) {
    diag = SparseElim<BigInt>(m).run();
  }
  SnfResult out;
  out.factors = chain_normalize(std::move(diag));
  out.rank = static_cast<int>(out.factors.size());
  return out;
}

SnfResult smith_normal_form(const std::vector<std::vector<long long>>& dense) {
  SparseIntMat m;
  m.rows = static_cast<int>(dense.size());
  m.cols = m.rows == 0 ? 0 : static_cast<int>(dense[0].size());
  m.entries.assign(m.cols, {});
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (dense[r][c] != 0) {
        if (dense[r][c] > std::numeric_limits<int>::max() ||
            dense[r][c] < std::numeric_limits<int>::min())
          throw parse_error("smith_normal_form: dense entry out of int range");
        m.entries[c].emplace_back(r, static_cast<int>(dense[r][c]));
      }
  return smith_normal_form(m);
}

long long HomologyReport::betti_at(int k) const {
  if (k < 0 || k > max_dim()) return 0;
  return betti[k];
}

const std::vector<std::uint64_t>& HomologyReport::torsion_at(int k) const {
  static const std::vector<std::uint64_t> kNone;
  if (k < 0 || k > max_dim()) return kNone;
  return torsion[k];
}

bool HomologyReport::all_trivial() const {
  if (!nonempty) return false;
  for (int k = 0; k <= max_dim(); ++k)
    if (!trivial_at(k)) return false;
  return true;
}

bool operator==(const HomologyReport& a, const HomologyReport& b) {
  if (a.nonempty != b.nonempty) return false;
  int top = std::max(a.max_dim(), b.max_dim());
  for (int k = 0; k <= top; ++k)
    if (a.betti_at(k) != b.betti_at(k) || a.torsion_at(k) != b.torsion_at(k)) return false;
  return true;
}

HomologyReport homology_from_boundaries(const std::vector<std::size_t>& counts,
                                        const std::vector<SparseIntMat>& boundaries,
                                        bool nonempty) {
  check_boundary_squares_to_zero(boundaries);
  HomologyReport report;
  report.nonempty = nonempty;
  int top = static_cast<int>(counts.size()) - 1;
  if (top < 0) return report;

  std::vector<SnfResult> snf(top + 2);
  for (int k = 1; k <= top; ++k) snf[k] = smith_normal_form(boundaries[k]);

  report.betti.assign(top + 1, 0);
  report.torsion.assign(top + 1, {});
  for (int k = 0; k <= top; ++k) {
    long long rank_k = (k == 0) ? (nonempty ? 1 : 0) : snf[k].rank;  // augmentation at 0
    long long rank_up = (k + 1 <= top) ? snf[k + 1].rank : 0;
    report.betti[k] = static_cast<long long>(counts[k]) - rank_k - rank_up;
    if (k + 1 <= top)
      for (const BigInt& d : snf[k + 1].factors)
        if (d > 1) {
          if (d > std::numeric_limits<std::uint64_t>::max())
            throw verification_error("torsion coefficient exceeds 64 bits");
          report.torsion[k].push_back(d.convert_to<std::uint64_t>());
        }
  }
  return report;
}

HomologyReport reduced_homology(const ChainComplex& cc) {
  std::vector<std::size_t> counts;
  counts.reserve(cc.bases.size());
  for (auto& basis : cc.bases) counts.push_back(basis.size());
  return homology_from_boundaries(counts, cc.boundaries, cc.nonempty());
}

ConnectivityVerdict homological_connectivity(const HomologyReport& r, bool nonempty) {
  ConnectivityVerdict v;
  if (!nonempty) {
    v.level = kLevelEmpty;
    return v;
  }
  for (int k = 0; k <= r.max_dim(); ++k)
    if (!r.trivial_at(k)) {
      v.level = k - 1;
      return v;
    }
  v.level = kLevelInfinite;
  return v;
}

HomologyReport order_complex_oracle(const CellComplex& c) {
  const std::vector<MultiHom>& cells = c.cells;
  int n = static_cast<int>(cells.size());
  if (n == 0) return HomologyReport{};

  // strict faces of each cell; dim-major sort puts faces at smaller indices
  std::vector<std::vector<int>> faces(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (cell_subset(cells[j], cells[i]) && !(cells[j] == cells[i]))
        faces[i].push_back(j);

  // chains of cells, grouped by simplex dimension (= length - 1)
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<int> stack;
  auto grow = [&](auto&& self, int top) -> void {
    stack.push_back(top);
    std::size_t d = stack.size() - 1;
    if (chains.size() <= d) chains.resize(d + 1);
    chains[d].emplace_back(stack.rbegin(), stack.rend());  // ascending order
    for (int f : faces[top]) self(self, f);
    stack.pop_back();
  };
  // descend from every cell; stack holds a strictly decreasing chain
  for (int i = 0; i < n; ++i) grow(grow, i);

  int top_dim = static_cast<int>(chains.size()) - 1;
  for (int d = 0; d <= top_dim; ++d) std::sort(chains[d].begin(), chains[d].end());

  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  // facet ids of every chain, via lookup in the sorted level below
  std::vector<std::vector<std::vector<int>>> facet_ids(top_dim + 1);
  {
    std::unordered_map<std::vector<int>, int, VecHash> below;
    for (int d = 1; d <= top_dim; ++d) {
      below.clear();
      below.reserve(chains[d - 1].size() * 2);
      for (auto& ch : chains[d - 1]) below.emplace(ch, static_cast<int>(below.size()));
      facet_ids[d].resize(chains[d].size());
      std::vector<int> face;
      for (std::size_t j = 0; j < chains[d].size(); ++j) {
        const std::vector<int>& ch = chains[d][j];
        facet_ids[d][j].reserve(ch.size());
        for (std::size_t t = 0; t < ch.size(); ++t) {
          face.clear();
          for (std::size_t s = 0; s < ch.size(); ++s)
            if (s != t) face.push_back(ch[s]);
          facet_ids[d][j].push_back(below.at(face));
        }
      }
    }
  }

  // free-pair collapse before assembling matrices: a chain with exactly one
  // living coface is removed together with it, preserving the homotopy type;
  // the surviving core is usually tiny
  std::vector<std::vector<int>> coface_count(top_dim + 1);
  std::vector<std::vector<std::vector<int>>> cofaces(top_dim + 1);
  std::vector<std::vector<char>> alive(top_dim + 1);
  for (int d = 0; d <= top_dim; ++d) {
    coface_count[d].assign(chains[d].size(), 0);
    cofaces[d].resize(chains[d].size());
    alive[d].assign(chains[d].size(), 1);
  }
  for (int d = 1; d <= top_dim; ++d)
    for (std::size_t j = 0; j < chains[d].size(); ++j)
      for (int f : facet_ids[d][j]) {
        ++coface_count[d - 1][f];
        cofaces[d - 1][f].push_back(static_cast<int>(j));
      }

  std::vector<std::pair<int, int>> queue;  // (dim, id) with a single coface
  for (int d = 0; d < top_dim; ++d)
    for (std::size_t i = 0; i < chains[d].size(); ++i)
      if (coface_count[d][i] == 1) queue.emplace_back(d, static_cast<int>(i));
  while (!queue.empty()) {
    auto [d, i] = queue.back();
    queue.pop_back();
    if (!alive[d][i] || coface_count[d][i] != 1) continue;
    int t = -1;
    for (int cand : cofaces[d][i])
      if (alive[d + 1][cand]) {
        t = cand;
        break;
      }
    if (t < 0) continue;
    alive[d][i] = 0;
    alive[d + 1][t] = 0;
    for (int f : facet_ids[d + 1][t]) {
      if (!alive[d][f]) continue;
      if (--coface_count[d][f] == 1) queue.emplace_back(d, f);
    }
    if (d >= 1)
      for (int f : facet_ids[d][i]) {
        if (!alive[d - 1][f]) continue;
        if (--coface_count[d - 1][f] == 1) queue.emplace_back(d - 1, f);
      }
  }

  // assemble the core's boundary stack
  std::vector<std::vector<int>> new_id(top_dim + 1);
  std::vector<std::size_t> counts;
  for (int d = 0; d <= top_dim; ++d) {
    new_id[d].assign(chains[d].size(), -1);
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < chains[d].size(); ++i)
      if (alive[d][i]) new_id[d][i] = static_cast<int>(cnt++);
    counts.push_back(cnt);
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  int core_top = static_cast<int>(counts.size()) - 1;

  std::vector<SparseIntMat> boundaries(core_top + 1);
  for (int d = 1; d <= core_top; ++d) {
    SparseIntMat& m = boundaries[d];
    m.rows = static_cast<int>(counts[d - 1]);
    m.cols = static_cast<int>(counts[d]);
    m.entries.assign(m.cols, {});
    for (std::size_t j = 0; j < chains[d].size(); ++j) {
      if (!alive[d][j]) continue;
      auto& col = m.entries[new_id[d][j]];
      int sign = 1;
      for (int f : facet_ids[d][j]) {
        if (alive[d - 1][f]) col.emplace_back(new_id[d - 1][f], sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
    }
  }

  return homology_from_boundaries(counts, boundaries, true);
}

long long euler_characteristic_cells(const CellComplex& c) {
  long long chi = 0;
  for (const MultiHom& cell : c.cells) chi += (cell_dim(cell) % 2 == 0) ? 1 : -1;
  return chi;
}

long long euler_characteristic_betti(const HomologyReport& r) {
  if (!r.nonempty) return 0;
  long long chi = 1;  // un-reduce dimension 0
  for (int k = 0; k <= r.max_dim(); ++k)
    chi += (k % 2 == 0) ? r.betti_at(k) : -r.betti_at(k);
  return chi;
}

}  // namespace homkit
