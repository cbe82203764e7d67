#include "largeness/abelian_group.hpp"
#include "largeness/integer_matrix.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace largeness;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, int cols) {
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
    return m;
}

// cofactor-expansion determinant: an oracle independent of the elimination
// code under test
Int det_oracle(const IntMatrix& m) {
    int n = m.rows;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, w = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, w++) = m.at(r, c);
            }
        Int term = m.at(0, j) * det_oracle(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

void check_snf_contract(const IntMatrix& m) {
    SmithNormalForm s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
    if (s.u.rows > 0) {
        Int du = det_oracle(s.u);
        CHECK((du == 1 || du == -1));
    }
    if (s.v.rows > 0) {
        Int dv = det_oracle(s.v);
        CHECK((dv == 1 || dv == -1));
    }
    int lim = std::min(m.rows, m.cols);
    for (int i = 0; i + 1 < lim; ++i) {
        const Int& a = s.d.at(i, i);
        const Int& b = s.d.at(i + 1, i + 1);
        if (a != 0) CHECK(b % a == 0);
        if (a == 0) CHECK(b == 0);
    }
    for (int i = 0; i < s.d.rows; ++i)
        for (int j = 0; j < s.d.cols; ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form on the worked examples") {
    SUBCASE("diag(2,3) has invariant factors 1, 6") {
        IntMatrix m = from_rows({{2, 0}, {0, 3}}, 2);
        SmithNormalForm s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 1);
        CHECK(s.d.at(1, 1) == 6);
        check_snf_contract(m);
    }
    SUBCASE("zero matrix") {
        IntMatrix m(1, 1);
        SmithNormalForm s = smith_normal_form(m);
        CHECK(s.d.at(0, 0) == 0);
    }
    SUBCASE("identity") {
        IntMatrix m = IntMatrix::identity(4);
        SmithNormalForm s = smith_normal_form(m);
        CHECK(s.d == IntMatrix::identity(4));
    }
}

TEST_CASE("smith normal form contract on random matrices") {
    std::mt19937 rng(20240911);
    std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
    for (int it = 0; it < 120; ++it) {
        IntMatrix m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
        check_snf_contract(m);
    }
}

TEST_CASE("cokernels") {
    SUBCASE("no relations mod 2 gives an elementary abelian group of rank 5") {
        IntMatrix m(0, 5);
        CokernelResult c = cokernel(m, Int(2));
        CHECK(c.group.free_rank == 0);
        CHECK(c.group.d() == 5);
        CHECK(c.group.invariant_factors == std::vector<Int>(5, Int(2)));
        CHECK(c.group.order() == 32);
    }
    SUBCASE("three relation rows [3] on one generator") {
        CokernelResult c = cokernel(from_rows({{3}, {3}, {3}}, 1));
        CHECK(c.group.invariant_factors == std::vector<Int>{Int(3)});
        CHECK(c.group.free_rank == 0);
    }
    SUBCASE("identity relations kill everything") {
        CokernelResult c = cokernel(IntMatrix::identity(3), Int(5));
        CHECK(c.group.is_trivial());
        CHECK(c.group.d() == 0);
    }
    SUBCASE("free part appears without a modulus") {
        CokernelResult c = cokernel(from_rows({{2, 0, 0}}, 3));
        CHECK(c.group.free_rank == 2);
        CHECK(c.group.invariant_factors == std::vector<Int>{Int(2)});
    }
    SUBCASE("generator images are a homomorphism onto the quotient") {
        IntMatrix m = from_rows({{2, 4}, {0, 8}}, 2);
        CokernelResult c = cokernel(m);
        // every relation row maps to zero
        for (int r = 0; r < m.rows; ++r) {
            ElementVector sum(c.generator_images[0].size(), Int(0));
            for (int j = 0; j < m.cols; ++j)
                for (size_t t = 0; t < sum.size(); ++t)
                    sum[t] += m.at(r, j) * c.generator_images[static_cast<size_t>(j)][t];
            CHECK(is_zero_element(reduce_element(c.group, sum)));
        }
    }
}

TEST_CASE("cokernel order equals |det| on nonsingular square matrices") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> entry(-5, 5);
    int done = 0;
    while (done < 40) {
        IntMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = entry(rng);
        Int d = det_oracle(m);
        if (d == 0) continue;
        ++done;
        CokernelResult c = cokernel(m);
        CHECK(c.group.free_rank == 0);
        CHECK(c.group.order() == abs(d));
    }
}

TEST_CASE("subgroup generated") {
    SUBCASE("no generators give the trivial subgroup") {
        FiniteAbelianGroup a;
        a.invariant_factors = {2, 4};
        FiniteAbelianGroup s = subgroup_generated(a, {});
        CHECK(s.is_trivial());
        CHECK(s.d() == 0);
    }
    SUBCASE("one vector in the Klein group") {
        FiniteAbelianGroup a;
        a.invariant_factors = {2, 2};
        FiniteAbelianGroup s = subgroup_generated(a, {{Int(1), Int(0)}});
        CHECK(s.invariant_factors == std::vector<Int>{Int(2)});
        CHECK(s.d() == 1);
    }
    SUBCASE("2 and 3 generate all of Z/6") {
        FiniteAbelianGroup a;
        a.invariant_factors = {6};
        FiniteAbelianGroup s = subgroup_generated(a, {{Int(2)}, {Int(3)}});
        CHECK(s.invariant_factors == std::vector<Int>{Int(6)});
        CHECK(s.d() == 1);
        // oracle: exhaustive closure of {2, 3} under addition mod 6
        std::set<int> closure{0};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x : std::set<int>(closure))
                for (int g : {2, 3})
                    if (closure.insert((x + g) % 6).second) grew = true;
        }
        CHECK(closure.size() == static_cast<size_t>(s.order()));
    }
    SUBCASE("the standard generators give back the whole group") {
        FiniteAbelianGroup a;
        a.invariant_factors = {2, 2, 6};
        std::vector<ElementVector> gens;
        for (int i = 0; i < 3; ++i) {
            ElementVector e(3, Int(0));
            e[static_cast<size_t>(i)] = 1;
            gens.push_back(e);
        }
        CHECK(subgroup_generated(a, gens) == a);
    }
    SUBCASE("closure-size oracle on random data") {
        std::mt19937 rng(5150);
        for (int it = 0; it < 30; ++it) {
            FiniteAbelianGroup a;
            a.invariant_factors = {2, 4}; // divisibility chain, order 8
            std::uniform_int_distribution<int> c0(0, 1), c1(0, 3), ngens(1, 3);
            std::vector<ElementVector> gens;
            int m = ngens(rng);
            for (int i = 0; i < m; ++i) gens.push_back({Int(c0(rng)), Int(c1(rng))});
            FiniteAbelianGroup s = subgroup_generated(a, gens);
            std::set<std::pair<int, int>> closure{{0, 0}};
            bool grew = true;
            while (grew) {
                grew = false;
                for (auto x : std::set<std::pair<int, int>>(closure))
                    for (const auto& g : gens) {
                        auto y = std::pair{(x.first + static_cast<int>(g[0])) % 2,
                                           (x.second + static_cast<int>(g[1])) % 4};
                        if (closure.insert(y).second) grew = true;
                    }
            }
            CHECK(Int(closure.size()) == s.order());
        }
    }
}

TEST_CASE("characters") {
    SUBCASE("cyclic of order three") {
        FiniteAbelianGroup a;
        a.invariant_factors = {3};
        auto chars = characters(a);
        REQUIRE(chars.size() == 3);
        CHECK(chars[0].residues == std::vector<Int>{Int(0)});
        CHECK(chars[1].residues == std::vector<Int>{Int(1)});
        CHECK(chars[2].residues == std::vector<Int>{Int(2)});
    }
    SUBCASE("Klein group has four characters") {
        FiniteAbelianGroup a;
        a.invariant_factors = {2, 2};
        CHECK(characters(a).size() == 4);
    }
    SUBCASE("trivial group has exactly the trivial character") {
        FiniteAbelianGroup a;
        auto chars = characters(a);
        REQUIRE(chars.size() == 1);
        CHECK(chars[0].residues.empty());
    }
    SUBCASE("enumeration bound") {
        FiniteAbelianGroup a;
        a.invariant_factors = {1000};
        CHECK_THROWS_AS(characters(a, Int(512)), ResourceLimitError);
    }
}

TEST_CASE("character orthogonality cardinality for all groups up to order 512") {
    // for every nonzero v, the number of characters with chi(v) = 1 is
    // |A| / order(v)
    std::vector<std::vector<Int>> shapes = {
        {Int(2)}, {Int(8)}, {Int(2), Int(2)}, {Int(2), Int(4)}, {Int(3), Int(3)},
        {Int(2), Int(2), Int(4)}, {Int(6)}, {Int(2), Int(6)}, {Int(4), Int(8)},
        {Int(2), Int(2), Int(2), Int(2)}, {Int(3), Int(9)}, {Int(5), Int(10)},
    };
    for (const auto& f : shapes) {
        FiniteAbelianGroup a;
        a.invariant_factors = f;
        REQUIRE(a.order() <= 512);
        long long m = element_count_checked(a, 512);
        auto chars = characters(a);
        for (long long r = 1; r < m; ++r) {
            ElementVector v = unrank_element(a, r);
            long long killers = 0;
            for (const Character& chi : chars)
                if (character_value_arg(a, chi, v) == 0) ++killers;
            auto ord = element_order(a, v);
            REQUIRE(ord.has_value());
            CHECK(Int(killers) * *ord == a.order());
        }
    }
}

TEST_CASE("character argument wrapping") {
    FiniteAbelianGroup z5;
    z5.invariant_factors = {5};
    Character trivial{{Int(0)}}, k1{{Int(1)}};
    CHECK(character_value_arg(z5, trivial, {Int(3)}) == 0);
    CHECK(character_value_arg(z5, k1, {Int(1)}) == Rat(1, 5));
    // 3/5 wraps into (-1/2, 1/2] as -2/5
    CHECK(character_value_arg(z5, k1, {Int(3)}) == Rat(-2, 5));
    // the boundary value 1/2 stays at 1/2
    FiniteAbelianGroup z2;
    z2.invariant_factors = {2};
    CHECK(character_value_arg(z2, Character{{Int(1)}}, {Int(1)}) == Rat(1, 2));
}

TEST_CASE("element order") {
    FiniteAbelianGroup a;
    a.invariant_factors = {2, 6};
    CHECK(*element_order(a, {Int(0), Int(0)}) == 1);
    CHECK(*element_order(a, {Int(1), Int(3)}) == 2);
    CHECK(*element_order(a, {Int(1), Int(1)}) == 6);
    FiniteAbelianGroup with_free;
    with_free.invariant_factors = {2};
    with_free.free_rank = 1;
    CHECK(!element_order(with_free, {Int(1), Int(1)}).has_value());
    CHECK(*element_order(with_free, {Int(1), Int(0)}) == 2);
}
