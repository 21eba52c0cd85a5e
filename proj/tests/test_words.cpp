#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "a4cb/chambers.hpp"
#include "a4cb/cones.hpp"
#include "a4cb/lp.hpp"
#include "a4cb/words.hpp"

using namespace a4cb;

// Brute-force oracle: every length-k word over [1,n] that is reduced and
// multiplies to w0.  Independent of the BFS closure in the library.
static std::vector<Word> brute_force_w0(int n) {
  int k = w0_length(n);
  std::vector<Word> out;
  Word w(k, 1);
  for (;;) {
    if (is_w0_word(w, n)) out.push_back(w);
    int t = k - 1;
    while (t >= 0 && w[t] == n) w[t--] = 1;
    if (t < 0) break;
    ++w[t];
  }
  return out;
}

TEST_CASE("permutation of a word") {
  CHECK(permutation_of({1, 3, 2, 1, 3, 2}, 3) == std::vector<int>{4, 3, 2, 1});
  CHECK(permutation_of({}, 4) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(permutation_of({1, 1}, 2) == std::vector<int>{1, 2, 3});
  CHECK(!is_reduced({1, 1}, 2));
  CHECK_THROWS(permutation_of({7}, 4));
}

TEST_CASE("neighbors") {
  auto nb = neighbors({1, 2, 1}, 2);
  REQUIRE(nb.size() == 1);
  CHECK(nb[0].first.braid);
  CHECK(nb[0].first.pos == 0);
  CHECK(nb[0].second == Word{2, 1, 2});

  auto nb2 = neighbors({2, 1, 2}, 2);
  REQUIRE(nb2.size() == 1);
  CHECK(nb2[0].second == Word{1, 2, 1});

  // first commutation step of the fixed j -> j' move sequence
  auto nb3 = neighbors({1, 3, 2, 4, 1, 3, 2, 4, 1, 3}, 4);
  bool found = false;
  for (auto& [m, u] : nb3)
    if (u == Word{3, 1, 2, 4, 1, 3, 2, 4, 1, 3}) found = true;
  CHECK(found);

  // every neighbor of a reduced w0 word is a reduced w0 word
  for (auto& [m, u] : nb3) CHECK(is_w0_word(u, 4));
}

TEST_CASE("word counts against the brute-force oracle") {
  CHECK(enumerate_w0_words(2) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(enumerate_w0_words(3).size() == 16);
  CHECK(brute_force_w0(3) == enumerate_w0_words(3));
  CHECK(enumerate_w0_words(4).size() == 768);
  CHECK(brute_force_w0(4) == enumerate_w0_words(4));
}

TEST_CASE("commutation classes") {
  CHECK(commutation_classes(2).size() == 2);
  CHECK(commutation_classes(3).size() == 8);
  CHECK(commutation_classes(4).size() == 62);

  // ids are 1-based and ordered by representative
  auto& cls = commutation_classes(4);
  for (size_t c = 0; c + 1 < cls.size(); ++c) {
    CHECK(cls[c].id == (int)c + 1);
    CHECK(cls[c].rep < cls[c + 1].rep);
  }
  size_t total = 0;
  for (auto& c : cls) total += c.members.size();
  CHECK(total == 768);
}

TEST_CASE("class graph") {
  auto& g2 = class_graph(2);
  CHECK(g2.vertices == 2);
  CHECK(g2.adjacent(0, 1));

  auto& g4 = class_graph(4);
  CHECK(g4.vertices == 62);
  CHECK(g4.connected());

  // the classes of these two words are adjacent
  int c1 = class_index_of({2, 3, 1, 2, 1, 3, 4, 3, 2, 1}, 4);
  int c2 = class_index_of({2, 3, 1, 2, 3, 4, 3, 2, 1, 2}, 4);
  CHECK(g4.adjacent(c1, c2));
}

TEST_CASE("iota preserves the class graph") {
  auto& g = class_graph(4);
  auto& cls = commutation_classes(4);
  std::vector<int> img(cls.size());
  for (size_t c = 0; c < cls.size(); ++c)
    img[c] = class_index_of(iota(cls[c].rep, 4), 4);
  for (size_t c = 0; c < cls.size(); ++c) CHECK(img[img[c]] == (int)c);
  for (auto& [x, y] : g.edges) CHECK(g.adjacent(img[x], img[y]));
}

TEST_CASE("chamber sets") {
  auto cs = chamber_sets({1, 3, 2, 1, 3, 2}, 3);
  REQUIRE(cs.size() == 3);
  std::set<std::string> labels;
  for (auto& c : cs) labels.insert(chamber_set_str(c.set));
  CHECK(labels == std::set<std::string>{"134", "3", "13"});

  auto cs1 = chamber_sets({2, 3, 1, 2, 3, 4, 3, 1, 2, 1}, 4);
  std::set<std::string> l1;
  for (auto& c : cs1) l1.insert(chamber_set_str(c.set));
  CHECK(l1 == std::set<std::string>{"25", "15", "245", "125", "1245", "1235"});

  auto cs2 = chamber_sets({2, 3, 1, 2, 3, 4, 3, 2, 1, 2}, 4);
  std::set<std::string> l2;
  for (auto& c : cs2) l2.insert(chamber_set_str(c.set));
  CHECK(l2 == std::set<std::string>{"25", "15", "245", "125", "1245", "124"});

  CHECK_THROWS(chamber_sets({1, 2, 1}, 2 + 1));
}

TEST_CASE("partial quivers and the map l") {
  CHECK(partial_quivers(2).size() == 2);
  CHECK(partial_quivers(3).size() == 8);
  CHECK(partial_quivers(4).size() == 22);

  CHECK(l_map({4, "LLL"}) == parse_chamber_set("234"));
  CHECK(l_map({4, "RRR"}) == parse_chamber_set("15"));
  CHECK(l_map({4, "--L"}) == parse_chamber_set("2"));

  CHECK(chamber_set_to_quiver(parse_chamber_set("234"), 4).edges == "LLL");
  CHECK(chamber_set_to_quiver(parse_chamber_set("15"), 4).edges == "RRR");
  CHECK_THROWS(chamber_set_to_quiver(parse_chamber_set("2345"), 4));

  // l is injective and its image is exactly the chamber sets of w0 words
  for (int n = 2; n <= 4; ++n) {
    std::set<ChamberSet> image;
    for (auto& p : partial_quivers(n)) CHECK(image.insert(l_map(p)).second);
    std::set<ChamberSet> occurring;
    for (auto& w : enumerate_w0_words(n))
      for (auto& c : chamber_sets(w, n)) occurring.insert(c.set);
    CHECK(image == occurring);
  }
}

TEST_CASE("quivers of a word") {
  auto qs = quivers_of_word({1, 3, 2, 1, 3, 2}, 3);
  CHECK(qs.size() == 3);
  for (auto& rep : commutation_classes(4)) {
    auto q = quivers_of_word(rep.rep, 4);
    std::set<PartialQuiver> distinct(q.begin(), q.end());
    CHECK(distinct.size() == 6);
    // identical across the class
    for (auto& w : rep.members) {
      auto q2 = quivers_of_word(w, 4);
      CHECK(std::set<PartialQuiver>(q2.begin(), q2.end()) == distinct);
    }
    if (rep.id > 3) break;  // spot-check a few classes; the rest follows below
  }
}

TEST_CASE("chamber families and long-braid adjacency (ranks 3 and 4)") {
  for (int n = 3; n <= 4; ++n) {
    auto& cls = commutation_classes(n);
    auto& g = class_graph(n);
    std::vector<std::set<ChamberSet>> fam(cls.size());
    for (size_t c = 0; c < cls.size(); ++c)
      for (auto& ch : chamber_sets(cls[c].rep, n)) fam[c].insert(ch.set);
    for (size_t x = 0; x < cls.size(); ++x)
      for (size_t y = x + 1; y < cls.size(); ++y) {
        std::vector<ChamberSet> diff;
        std::set_symmetric_difference(fam[x].begin(), fam[x].end(),
                                      fam[y].begin(), fam[y].end(),
                                      std::back_inserter(diff));
        CHECK((diff.size() == 2) == g.adjacent((int)x, (int)y));
      }
  }
}

TEST_CASE("root order enumerates each positive root once") {
  for (auto& w : {Word{1, 3, 2, 4, 1, 3, 2, 4, 1, 3}, Word{3, 2, 1, 4, 3, 2, 3, 4, 1, 3}}) {
    auto roots = root_order(w, 4);
    std::set<RootSpan> rs(roots.begin(), roots.end());
    CHECK(rs.size() == 10);
  }
}

TEST_CASE("P and Q matrices of the worked example") {
  Word w{3, 2, 1, 4, 3, 2, 3, 4, 1, 3};
  IntMat P_expected = {
      {-1, 1, 0, 1, -1, 0, 0, 0, 0, 0},
      {0, -1, 1, 0, 1, -1, 0, 0, 0, 0},
      {0, 0, -1, 0, 0, 1, 0, 0, -1, 0},
      {0, 0, 0, -1, 1, 0, 1, -1, 0, 0},
      {0, 0, 0, 0, -1, 1, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 1, 0, -1},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
  };
  IntMat Q_expected = {
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {1, 0, 0, 1, 0, 1, 0, 1, 1, 0},
      {1, 1, 0, 1, 1, 1, 1, 1, 1, 0},
      {1, 1, 1, 0, 0, 0, 0, 0, 1, 1},
      {1, 1, 1, 1, 0, 1, 0, 1, 1, 1},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 1, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
  };
  auto cone = build_cone(w, 4);
  CHECK(cone.P == P_expected);
  CHECK(cone.Q == Q_expected);

  // typical cone point at unit coefficients = row sums of Q
  IntVec pt = mat_vec(cone.Q, IntVec(10, 1));
  CHECK(pt == IntVec{1, 5, 8, 5, 8, 10, 1, 3, 1, 1});
  CHECK(cone_contains(cone, pt));
  CHECK(cone_contains(cone, IntVec(10, 0)));
  CHECK(!cone_contains(cone, IntVec{0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));

  CHECK(invert_exact(identity_mat(4)) == identity_mat(4));
  CHECK_THROWS(invert_exact(IntMat{{2, 0}, {0, 1}}));
}

TEST_CASE("P Q = identity and spanning vectors = Q columns, all classes") {
  for (auto& cls : commutation_classes(4)) {
    auto cone = build_cone(cls.rep, 4);
    CHECK(mat_mul(cone.P, cone.Q) == identity_mat(10));
    int k = 10;
    // chamber columns
    for (int r = 0; r < k - 4; ++r) {
      auto quiver = chamber_set_to_quiver(cone.chambers[r].set, 4);
      auto sv = spanning_vector(cone, quiver);
      for (int t = 0; t < k; ++t) CHECK(sv[t] == cone.Q[t][r]);
    }
    // simple-root columns
    for (int j = 1; j <= 4; ++j) {
      auto sv = spanning_vector(cone, j);
      for (int t = 0; t < k; ++t) {
        CHECK(sv[t] == cone.Q[t][k - 4 + j - 1]);
        CHECK((sv[t] == 0 || sv[t] == 1));
      }
    }
  }
}

TEST_CASE("cone membership of spanning combinations") {
  std::mt19937_64 rng(20240811);
  auto& cls = commutation_classes(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto& c = cls[rng() % cls.size()];
    auto cone = build_cone(c.rep, 4);
    IntVec coeffs(10);
    for (auto& x : coeffs) x = (long long)(rng() % 4);
    CHECK(cone_contains(cone, mat_vec(cone.Q, coeffs)));
  }
}

TEST_CASE("rank 2 P matrix") {
  auto P = build_P({1, 2, 1}, 2);
  CHECK(P[0] == IntVec{-1, 1, -1});
  CHECK(P.size() == 3);
}

TEST_CASE("lp feasibility basics") {
  // x >= 1, -x >= 1 infeasible; x >= 1 alone feasible
  CHECK(!exists_ge({{1}, {-1}}, {1, 1}));
  CHECK(exists_ge({{1}}, {1}));
  CHECK(cone_has_interior({{1, 0}, {0, 1}}));
  CHECK(!cone_has_interior({{1, 0}, {-1, 0}}));        // only the plane x=0
  CHECK(cone_has_interior({{1, 0}, {-1, 1}}));
  CHECK(valid_on_cone({1, 1}, {{1, 0}, {0, 1}}));
  CHECK(!valid_on_cone({1, -1}, {{1, 0}, {0, 1}}));
  CHECK(redundant_in_cone({{1, 0}, {0, 1}, {1, 1}}, 2));
  CHECK(!redundant_in_cone({{1, 0}, {0, 1}, {1, 1}}, 0));
  auto pt = interior_point({{1, 0}, {-1, 2}});
  REQUIRE(pt.has_value());
  CHECK((*pt)[0] >= 1);
  CHECK(-(*pt)[0] + 2 * (*pt)[1] >= 1);
}
