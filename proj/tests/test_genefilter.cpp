#include <doctest.h>

#include <random>

#include "genecluster/errors.hpp"
#include "genecluster/genefilter.hpp"
#include "oracles.hpp"

using namespace genecluster;

namespace {

class_labels two_classes(const std::vector<std::size_t>& codes) {
    class_labels l;
    l.classes = {"A", "B"};
    l.sample_class = codes;
    for (std::size_t j = 0; j < codes.size(); ++j) l.labels["s" + std::to_string(j)] = l.classes[codes[j]];
    return l;
}

}  // namespace

TEST_CASE("entropy worked values") {
    CHECK(entropy(std::vector<double>{0.5, 0.5}) == 1.0);
    CHECK(entropy(std::vector<double>{1.0, 0.0}) == 0.0);
    // -0.25 log2 0.25 - 0.75 log2 0.75
    CHECK(entropy(std::vector<double>{0.25, 0.75}) == doctest::Approx(0.811278).epsilon(1e-6));
}

TEST_CASE("entropy rejects invalid distributions") {
    CHECK_THROWS_AS(entropy(std::vector<double>{0.6, 0.6}), invalid_distribution_error);
    CHECK_THROWS_AS(entropy(std::vector<double>{1.2, -0.2}), invalid_distribution_error);
    CHECK_NOTHROW(entropy(std::vector<double>{0.5, 0.5 + 5e-10}));
}

TEST_CASE("entropy is permutation invariant and maximal at the uniform distribution") {
    std::mt19937_64 rng(3);
    for (std::size_t b = 1; b <= 8; ++b) {
        std::vector<double> uniform(b, 1.0 / double(b));
        CHECK(entropy(uniform) == doctest::Approx(std::log2(double(b))).epsilon(1e-12));
        std::vector<double> p(b);
        double sum = 0.0;
        for (auto& x : p) sum += (x = std::uniform_real_distribution<double>(0.01, 1.0)(rng));
        for (auto& x : p) x /= sum;
        const double h = entropy(p);
        CHECK(h <= std::log2(double(b)) + 1e-12);
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(entropy(p) == doctest::Approx(h).epsilon(1e-14));
    }
}

TEST_CASE("discretize splits the observed range into equal-width bins") {
    const std::vector<double> row{0.0, 1.0, 2.0, 3.0, 2.9};
    CHECK(discretize(row, {3}) == std::vector<std::size_t>{0, 1, 2, 2, 2});
    CHECK(discretize(std::vector<double>{5, 5, 5}, {4}) == std::vector<std::size_t>{0, 0, 0});
    CHECK_THROWS_AS(discretize(row, {0}), parameter_error);
    CHECK(default_bin_count(34) == 7);
    CHECK(default_bin_count(32) == 6);
    CHECK(default_bin_count(1) == 1);
}

TEST_CASE("information gain worked values") {
    const auto labels = two_classes({0, 0, 1, 1});
    // perfect separation of two equal classes: H(X) = H(Y) = H(X,Y) = 1 bit
    CHECK(information_gain(std::vector<double>{0, 0, 1, 1}, labels, {2}) == doctest::Approx(1.0).epsilon(1e-15));
    // same bin distribution inside each class
    CHECK(information_gain(std::vector<double>{0, 1, 0, 1}, labels, {2}) == doctest::Approx(0.0));
    CHECK(information_gain(std::vector<double>{4, 4, 4, 4}, labels, {3}) == 0.0);
}

TEST_CASE("information gain error paths") {
    class_labels one;
    one.classes = {"A"};
    one.sample_class = {0, 0};
    CHECK_THROWS_AS(information_gain(std::vector<double>{1, 2}, one, {2}), degenerate_labels_error);
    CHECK_THROWS_AS(information_gain(std::vector<double>{1, 2, 3}, two_classes({0, 1}), {2}), shape_error);
}

TEST_CASE("information gain matches the joint-histogram oracle and is symmetric") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 2 + rng() % 9;
        const int bins = 1 + static_cast<int>(rng() % 3);
        std::vector<int> ints(m);
        std::vector<std::size_t> codes(m);
        for (auto& v : ints) v = static_cast<int>(rng() % 7);
        for (auto& c : codes) c = rng() % 2;
        codes[0] = 0;
        codes[1] = 1;
        std::vector<double> row(ints.begin(), ints.end());
        const double ig = information_gain(row, two_classes(codes), {std::size_t(bins)});
        const auto xbins = oracle::integer_bins(ints, bins);
        std::vector<int> y(codes.begin(), codes.end());
        CHECK(std::abs(ig - oracle::information_gain(xbins, y)) <= 1e-12);
        // IG(X;Y) == IG(Y;X)
        CHECK(std::abs(oracle::information_gain(xbins, y) - oracle::information_gain(y, xbins)) <= 1e-12);
        CHECK(ig >= 0.0);
    }
}

TEST_CASE("rank_and_select keeps the best genes in original order") {
    dense_matrix v = dense_matrix::from_rows({
        {0, 1, 0, 1},  // independent of class: IG 0
        {0, 0, 1, 1},  // separates classes: IG 1
        {5, 5, 5, 5},  // constant: IG 0
        {0, 0, 0, 1},  // partial
    });
    const expression_matrix m({"a", "b", "c", "d"}, {"s0", "s1", "s2", "s3"}, v);
    const auto labels = two_classes({0, 0, 1, 1});

    const auto sel = rank_and_select(m, labels, {2}, 2);
    CHECK(sel.ranking.order == std::vector<std::size_t>{1, 3, 0, 2});
    CHECK(sel.filtered.gene_ids() == std::vector<std::string>{"b", "d"});
    CHECK(sel.filtered.values().row(1)[3] == 1.0);

    const auto all = rank_and_select(m, labels, {2}, 4);
    CHECK(all.filtered == m);

    CHECK_THROWS_AS(rank_and_select(m, labels, {2}, 5), parameter_error);
    CHECK_THROWS_AS(rank_and_select(m, labels, {2}, 0), parameter_error);
}

TEST_CASE("rank_and_select on a two-gene instance picks the higher-gain gene") {
    // brute force: gene x has IG 1.0, gene y has IG 0.0 against these labels
    const expression_matrix m({"y", "x"}, {"s0", "s1", "s2", "s3"},
                              dense_matrix::from_rows({{1, 2, 1, 2}, {0, 0, 9, 9}}));
    const auto sel = rank_and_select(m, two_classes({0, 0, 1, 1}), {2}, 1);
    CHECK(sel.filtered.gene_ids() == std::vector<std::string>{"x"});
    CHECK(sel.ranking.scores[1] > sel.ranking.scores[0]);
}

TEST_CASE("ranking invariants hold on random data") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    const std::size_t n = 60, m = 12;
    std::vector<std::string> genes, samples;
    dense_matrix v(n, m);
    for (std::size_t i = 0; i < n; ++i) genes.push_back("g" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) samples.push_back("s" + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) v(i, j) = g(rng) + (j < 6 ? 0.0 : double(i % 3));
    const expression_matrix mat(genes, samples, v);
    std::vector<std::size_t> codes(m);
    for (std::size_t j = 0; j < m; ++j) codes[j] = j < 6 ? 0 : 1;

    const auto sel = rank_and_select(mat, two_classes(codes), {default_bin_count(m)}, 17);
    std::vector<std::size_t> sorted = sel.ranking.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i);
    for (std::size_t r = 1; r < n; ++r) {
        const auto a = sel.ranking.order[r - 1], b = sel.ranking.order[r];
        CHECK(sel.ranking.scores[a] >= sel.ranking.scores[b]);
        if (sel.ranking.scores[a] == sel.ranking.scores[b]) CHECK(a < b);
    }
    // kept rows are input rows, unchanged
    for (std::size_t r = 0; r < sel.filtered.genes(); ++r) {
        const auto& id = sel.filtered.gene_ids()[r];
        const auto src = std::stoul(id.substr(1));
        for (std::size_t j = 0; j < m; ++j) CHECK(sel.filtered.values()(r, j) == v(src, j));
        if (r > 0) CHECK(std::stoul(sel.filtered.gene_ids()[r - 1].substr(1)) < src);
    }
}
