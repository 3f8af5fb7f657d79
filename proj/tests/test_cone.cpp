#include <catch2/catch_amalgamated.hpp>

#include "sumcard/cone.hpp"
#include "sumcard/error.hpp"
#include "sumcard/random.hpp"
#include "test_util.hpp"

using namespace sumcard;

namespace {

const PointSet kTriangle =
    make_point_set(2, {{0, 0}, {1, 1}, {1, -2}, {-2, 1}, {0, 1}});
const PointSet kInterval = make_point_set(1, {{0}, {-1}, {2}, {1}});

std::vector<Point> lifted_vertices(const InstanceD3& inst) {
    std::vector<Point> out;
    for (const auto& v : inst.vertices()) out.push_back(lift(v));
    return out;
}

}  // namespace

TEST_CASE("fundamental domain fixtures") {
    FundamentalDomain id2 = fundamental_domain_points(IntMatrix({{1, 0}, {0, 1}}));
    CHECK(id2.points == std::vector<Point>{{0, 0}});
    CHECK(id2.count == 1);

    // columns (-1,1) and (2,1), determinant -3
    FundamentalDomain fd = fundamental_domain_points(IntMatrix({{-1, 2}, {1, 1}}));
    CHECK(fd.points == std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(fd.count == 3);

    InstanceD3 tri = make_instance_d3(kTriangle);
    IntMatrix basis(3, 3);
    std::vector<Point> lv = lifted_vertices(tri);
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) basis.at(r, c) = lv[c][r];
    CHECK(fundamental_domain_points(basis).count == 9);

    CHECK_THROWS_MATCHES(fundamental_domain_points(IntMatrix({{1, 1}, {1, 1}})), Error,
                         testutil::HasKind(ErrorKind::Singular));
    CHECK_THROWS_MATCHES(fundamental_domain_points(IntMatrix(2, 3)), Error,
                         testutil::HasKind(ErrorKind::Dimension));
}

TEST_CASE("fundamental domain size equals the determinant") {
    SplitMix64 rng(61);
    for (int n = 1; n <= 3; ++n) {
        int done = 0;
        while (done < 12) {
            auto basis = sample_basis(rng, n, 4, 50);
            REQUIRE(basis.has_value());
            FundamentalDomain fd = fundamental_domain_points(*basis);
            CHECK(fd.count == abs_int(testutil::det_laplace(*basis)));
            CHECK(std::is_sorted(fd.points.begin(), fd.points.end()));
            ++done;
        }
    }
}

TEST_CASE("residues reduce into the domain and respect the lattice") {
    FundamentalDomain fd = fundamental_domain_points(IntMatrix({{0, 3}, {1, 1}}));
    CHECK(fd.points == std::vector<Point>{{0, 0}, {1, 1}, {2, 1}});
    CHECK(residue_of({2, 2}, fd) == Point{2, 1});
    CHECK(residue_of({0, 0}, fd) == Point{0, 0});

    SplitMix64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        Point p{rng.uniform_int(-9, 9), rng.uniform_int(-9, 9)};
        Point r = residue_of(p, fd);
        CHECK(std::binary_search(fd.points.begin(), fd.points.end(), r));
        CHECK(residue_of(r, fd) == r);
        // adding a basis column leaves the residue unchanged
        CHECK(residue_of({p[0] + 0, p[1] + 1}, fd) == r);
        CHECK(residue_of({p[0] + 3, p[1] + 1}, fd) == r);
    }

    CHECK_THROWS_MATCHES(residue_of({1, 2, 3}, fd), Error,
                         testutil::HasKind(ErrorKind::Dimension));
}

TEST_CASE("minimal elements of the interval cone") {
    PointSet a = make_point_set(1, {{0}, {1}, {3}});
    std::vector<Point> basis{{0, 1}, {3, 1}};  // lifts of the hull vertices
    std::vector<MinimalElement> els = minimal_elements(a, basis, 5);
    REQUIRE(els.size() == 3);
    CHECK(els[0].point == Point{0, 0});
    CHECK(els[1].point == Point{1, 1});
    CHECK(els[2].point == Point{2, 2});
    CHECK(els[2].height == 2);  // exactly |det| - 1: the bound is tight here
    CHECK(els[2].residue == Point{2, 1});
    for (const auto& el : els) CHECK(el.height <= 2);
}

TEST_CASE("the unit simplex cone has a single minimal element") {
    for (int d = 1; d <= 3; ++d) {
        std::vector<Point> pts(1, Point(d, 0));
        std::vector<Point> basis;
        for (int i = 0; i < d; ++i) {
            Point e(d, 0);
            e[i] = 1;
            pts.push_back(e);
            basis.push_back(lift(e));
        }
        basis.push_back(lift(Point(d, 0)));
        std::vector<MinimalElement> els =
            minimal_elements(make_point_set(d, pts), basis, 4);
        REQUIRE(els.size() == 1);
        CHECK(els[0].point == Point(d + 1, 0));
    }
}

TEST_CASE("minimal heights of the triangle cone stay below the lattice index") {
    InstanceD3 tri = make_instance_d3(kTriangle);
    LatticeInvariants inv = analyze_lattice(tri);
    std::int64_t n64 = inv.n_lambda.convert_to<std::int64_t>();
    std::vector<MinimalElement> els =
        minimal_elements(tri.base, lifted_vertices(tri), n64 + 2);
    CHECK_FALSE(els.empty());
    for (const auto& el : els) CHECK(el.height <= n64 - 1);
}

TEST_CASE("coset decomposition of the triangle cone") {
    DecompositionReport rep = verify_decomposition(analyze_d3(kTriangle), 8);
    CHECK(rep.n_prime == 3);
    CHECK(rep.m_w == 1);
    CHECK(rep.covering_full);
    CHECK(rep.covering_restricted);
    CHECK(rep.disjoint_restricted);
    CHECK(rep.points_checked == 804);
    CHECK(rep.multiplicities.size() == 804);
    for (const auto& pm : rep.multiplicities) {
        CHECK(pm.full_count == 1);
        CHECK(pm.restricted_count == 1);
    }
}

TEST_CASE("coset covering of the interval cone needs the extra blocks") {
    DecompositionReport rep = verify_decomposition(analyze_d3(kInterval), 8);
    CHECK(rep.n_prime == 1);
    CHECK(rep.m_w == 2);
    CHECK(rep.covering_full);
    CHECK_FALSE(rep.covering_restricted);
    CHECK(rep.disjoint_restricted);

    DecompositionReport top = verify_decomposition(analyze_d3(kInterval), 0);
    CHECK(top.points_checked == 1);
    CHECK(top.covering_full);
    CHECK(top.covering_restricted);
    CHECK(top.disjoint_restricted);
}

TEST_CASE("enumeration budgets") {
    CHECK_THROWS_MATCHES(fundamental_domain_points(IntMatrix({{101, 0}, {0, 101}})), Error,
                         testutil::HasKind(ErrorKind::Budget));
    CHECK_THROWS_MATCHES(fundamental_domain_points(IntMatrix({{1, 6000000}, {0, 1}})), Error,
                         testutil::HasKind(ErrorKind::Budget));
}
