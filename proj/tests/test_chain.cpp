#include <doctest.h>

#include <numeric>
#include <random>

#include "homkit/chain.hpp"
#include "oracles.hpp"

using namespace homkit;

namespace {

Graph k1() { return make_graph(1, {}); }
Graph k2() { return make_graph(2, {{0, 1}}); }
Graph k3() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph p3() { return make_graph(3, {{0, 1}, {1, 2}}); }

HomologyReport homology_of(const Graph& g, int n) {
  return reduced_homology(chain_complex(build_hom(g, n)));
}

// determinant-divisor route: the k-th invariant factor is the ratio of gcds
// of k-by-k and (k-1)-by-(k-1) minors
long long det_of(const std::vector<std::vector<long long>>& m, std::vector<int> rows,
                 std::vector<int> cols) {
  if (rows.empty()) return 1;
  long long det = 0;
  long long sgn = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + i);
    det += sgn * m[rows[0]][cols[i]] * det_of(m, sub_rows, sub_cols);
    sgn = -sgn;
  }
  return det;
}

std::vector<long long> invariant_factors_by_minors(
    const std::vector<std::vector<long long>>& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<long long> dets_gcd;  // gcd of k-by-k minors, k = 1..
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    std::vector<int> rsel(k), csel(k);
    std::iota(rsel.begin(), rsel.end(), 0);
    bool more_rows = true;
    while (more_rows) {
      std::iota(csel.begin(), csel.end(), 0);
      bool more_cols = true;
      while (more_cols) {
        g = std::gcd(g, std::abs(det_of(m, rsel, csel)));
        more_cols = false;
        for (int i = k - 1; i >= 0; --i)
          if (csel[i] < cols - (k - i)) {
            ++csel[i];
            for (int j = i + 1; j < k; ++j) csel[j] = csel[j - 1] + 1;
            more_cols = true;
            break;
          }
      }
      more_rows = false;
      for (int i = k - 1; i >= 0; --i)
        if (rsel[i] < rows - (k - i)) {
          ++rsel[i];
          for (int j = i + 1; j < k; ++j) rsel[j] = rsel[j - 1] + 1;
          more_rows = true;
          break;
        }
    }
    if (g == 0) break;
    dets_gcd.push_back(g);
  }
  std::vector<long long> factors;
  long long prev = 1;
  for (long long d : dets_gcd) {
    factors.push_back(d / prev);
    prev = d;
  }
  return factors;
}

}  // namespace

TEST_SUITE_BEGIN("chain");

TEST_CASE("smith normal form on small fixed matrices") {
  using Dense = std::vector<std::vector<long long>>;
  SnfResult id3 = smith_normal_form(Dense{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(id3.rank == 3);
  CHECK(id3.factors == std::vector<BigInt>{1, 1, 1});

  SnfResult diag = smith_normal_form(Dense{{2, 0}, {0, 3}});
  CHECK(diag.rank == 2);
  CHECK(diag.factors == std::vector<BigInt>{1, 6});

  SnfResult zero = smith_normal_form(Dense{{0, 0}, {0, 0}});
  CHECK(zero.rank == 0);
  CHECK(zero.factors.empty());

  SnfResult proj = smith_normal_form(Dense{{2, 4}, {4, 8}});
  CHECK(proj.rank == 1);
  CHECK(proj.factors == std::vector<BigInt>{2});

  SnfResult two = smith_normal_form(Dense{{2}});
  CHECK(two.factors == std::vector<BigInt>{2});
}

TEST_CASE("smith normal form matches the determinant-divisor route") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    int rows = size(rng);
    int cols = size(rng);
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto& row : m)
      for (auto& v : row) v = entry(rng);
    SnfResult snf = smith_normal_form(m);
    std::vector<long long> expect = invariant_factors_by_minors(m);
    REQUIRE(snf.rank == static_cast<int>(expect.size()));
    for (std::size_t i = 0; i < expect.size(); ++i)
      CHECK(snf.factors[i] == BigInt(expect[i]));
  }
}

TEST_CASE("chain complex of the hexagon") {
  ChainComplex cc = chain_complex(build_hom(k2(), 3));
  REQUIRE(cc.bases.size() == 2);
  CHECK(cc.bases[0].size() == 6);
  CHECK(cc.bases[1].size() == 6);
  const SparseIntMat& d1 = cc.boundaries[1];
  CHECK(d1.rows == 6);
  CHECK(d1.cols == 6);
  for (int j = 0; j < d1.cols; ++j) {
    REQUIRE(d1.entries[j].size() == 2);
    int sum = 0;
    for (auto [row, coeff] : d1.entries[j]) {
      CHECK(std::abs(coeff) == 1);
      sum += coeff;
    }
    CHECK(sum == 0);
  }
}

TEST_CASE("chain complex of the full triangle simplex") {
  ChainComplex cc = chain_complex(build_hom(k1(), 3));
  REQUIRE(cc.bases.size() == 3);
  const SparseIntMat& d2 = cc.boundaries[2];
  REQUIRE(d2.cols == 1);
  REQUIRE(d2.entries[0].size() == 3);
  // basis [{1,2},{1,3},{2,3}]: column (+1,-1,+1)
  CHECK(d2.entries[0][0] == std::pair<int, int>{0, 1});
  CHECK(d2.entries[0][1] == std::pair<int, int>{1, -1});
  CHECK(d2.entries[0][2] == std::pair<int, int>{2, 1});
}

TEST_CASE("boundary squares to zero across small sweeps") {
  for (const Graph& g : {k1(), k2(), p3(), k3()})
    for (int n = 1; n <= 4; ++n)
      CHECK_NOTHROW(check_boundary_squares_to_zero(chain_complex(build_hom(g, n)).boundaries));
}

TEST_CASE("homology of named complexes") {
  SUBCASE("hexagon: circle") {
    HomologyReport r = homology_of(k2(), 3);
    CHECK(r.betti_at(0) == 0);
    CHECK(r.betti_at(1) == 1);
    CHECK(r.torsion_at(1).empty());
  }
  SUBCASE("single vertex: contractible for every n") {
    for (int n = 1; n <= 5; ++n) CHECK(homology_of(k1(), n).all_trivial());
  }
  SUBCASE("triangle with 3 colors: 6 points") {
    HomologyReport r = homology_of(k3(), 3);
    CHECK(r.betti_at(0) == 5);
    CHECK(r.betti_at(1) == 0);
  }
  SUBCASE("edge complexes are spheres") {
    for (int n = 2; n <= 4; ++n) {
      HomologyReport r = homology_of(k2(), n);
      for (int k = 0; k <= r.max_dim(); ++k) {
        CHECK(r.betti_at(k) == (k == n - 2 ? 1 : 0));
        CHECK(r.torsion_at(k).empty());
      }
    }
  }
}

TEST_CASE("euler characteristic agrees between cells and betti numbers") {
  for (const Graph& g : {k1(), k2(), p3(), k3()})
    for (int n = 1; n <= 4; ++n) {
      CellComplex cx = build_hom(g, n);
      if (cx.empty()) continue;
      CHECK(euler_characteristic_cells(cx) ==
            euler_characteristic_betti(reduced_homology(chain_complex(cx))));
    }
}

TEST_CASE("connectivity verdicts") {
  CHECK(homological_connectivity(homology_of(k2(), 3), true).level == 0);
  CHECK(homological_connectivity(HomologyReport{}, false).level == kLevelEmpty);
  CHECK(homological_connectivity(homology_of(k2(), 4), true).level == 1);
  CHECK(homological_connectivity(homology_of(k3(), 3), true).level == -1);
  ConnectivityVerdict contractible = homological_connectivity(homology_of(k1(), 3), true);
  CHECK(contractible.infinite());
  CHECK(std::string(ConnectivityVerdict::certified) == "homological");
}

TEST_CASE("order-complex oracle agrees with the cellular route") {
  SUBCASE("hexagon") {
    CellComplex cx = build_hom(k2(), 3);
    CHECK(order_complex_oracle(cx) == reduced_homology(chain_complex(cx)));
  }
  SUBCASE("single 0-cell") {
    CellComplex cx = build_hom(make_graph(0, {}), 2);
    HomologyReport r = order_complex_oracle(cx);
    CHECK(r.nonempty);
    CHECK(r.all_trivial());
  }
  SUBCASE("collapsible edge piece") {
    CellComplex d = build_delta_i(k2(), 3, 0b01);
    REQUIRE(d.cells.size() == 7);
    HomologyReport r = order_complex_oracle(d);
    CHECK(r.all_trivial());
    CHECK(r == reduced_homology(chain_complex(d)));
  }
  SUBCASE("sweep of small complexes") {
    for (const Graph& g : {k1(), k2(), p3(), k3()})
      for (int n = 1; n <= 4; ++n) {
        CellComplex cx = build_hom(g, n);
        if (cx.empty()) continue;
        CHECK(order_complex_oracle(cx) == reduced_homology(chain_complex(cx)));
      }
  }
}

TEST_SUITE_END();
