#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hookharm/errors.hpp"
#include "hookharm/harmonics.hpp"
#include "hookharm/macdonald.hpp"

using namespace hh;

namespace {

const VarNames QT = VarNames::qt();

RatFunc rf(const std::string& s) { return RatFunc(MPoly::parse(s, QT)); }

SymFunc sf(const std::vector<std::pair<std::string, Partition>>& terms) {
    SymFunc f(Basis::s);
    for (const auto& [c, lam] : terms) f.add_term(lam, rf(c));
    return f;
}

TensorSF ts(const std::vector<std::tuple<Partition, Partition, long>>& terms) {
    TensorSF t;
    for (const auto& [outer, inner, mult] : terms) t.add_term(outer, inner, mult);
    return t;
}

// x_i and y_i as MPoly factors over a matrix with n columns.
MPoly xv(int i, int n, int pow = 1) {
    (void)n;
    return MPoly::var(static_cast<size_t>(i), pow);
}
MPoly yv(int i, int n, int pow = 1) { return MPoly::var(static_cast<size_t>(n + i), pow); }

ThetaPoly theta(int i, int n) {
    ThetaPoly t(n);
    t.comps[static_cast<size_t>(i) + 1] = MPoly(Rat(1));
    return t;
}

// sum_i theta_i -> y_i over the row layout of a width-n matrix.
MPoly linearize(const ThetaPoly& f, int n) {
    MPoly out = f.comps[0];
    for (int i = 0; i < n; ++i)
        if (!f.comps[static_cast<size_t>(i) + 1].is_zero())
            out += f.comps[static_cast<size_t>(i) + 1].mul_mono(Mono::var(static_cast<size_t>(n + i)), Rat(1));
    return out;
}

ThetaPoly pi_sum(const ThetaPoly& f, const VarMatrix& vm) {
    ThetaPoly out(vm.n);
    for (int i = 0; i < vm.n; ++i) out = out + derive(f, 0, i, vm);
    return out;
}

MPoly vandermonde(int n) {
    MPoly v(Rat(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v = v * (xv(j, n) - xv(i, n));
    return v;
}

// Coefficient of t^power with t struck out, leaving polynomials in q.
SymFunc t_slice(const SymFunc& f, int power) {
    SymFunc out(f.basis());
    for (const auto& [lam, c] : f.coef()) {
        MPoly p = c.as_poly();
        MPoly kept;
        for (const auto& [m, x] : p.terms())
            if (m.exponent(1) == power) kept.add_term(m / Mono::var(1, power), x);
        if (!kept.is_zero()) out.add_term(lam, RatFunc(kept));
    }
    return out;
}

int t_degree(const SymFunc& f) {
    int d = -1;
    for (const auto& [lam, c] : f.coef()) d = std::max(d, c.as_poly().deg_in(1));
    return d;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST_CASE("variable matrix and theta components") {
    VarMatrix vm(2, 3);
    CHECK(vm.var(0, 0) == 0);
    CHECK(vm.var(0, 2) == 2);
    CHECK(vm.var(1, 0) == 3);
    CHECK(vm.var(1, 2) == 5);
    CHECK_THROWS_WITH_AS(vm.var(2, 0), doctest::Contains("outside the variable matrix"), Error);
    CHECK_THROWS_WITH_AS(vm.var(-1, 0), doctest::Contains("outside the variable matrix"), Error);
    CHECK_THROWS_WITH_AS(vm.var(0, 3), doctest::Contains("outside the variable matrix"), Error);
    CHECK_THROWS_WITH_AS(VarMatrix(0, 3), doctest::Contains("at least one row"), Error);
    CHECK_THROWS_WITH_AS(VarMatrix(1, 0), doctest::Contains("at least one column"), Error);

    ThetaPoly z(3);
    CHECK(z.is_zero());
    CHECK(z.n_thetas() == 3);
    ThetaPoly t1 = theta(0, 3);
    CHECK_FALSE(t1.is_zero());
    CHECK(t1 + z == t1);
    CHECK((t1 - t1).is_zero());
    CHECK(t1.scaled(Rat(2)).comps[1] == MPoly(Rat(2)));
    CHECK_THROWS_WITH_AS(t1 + ThetaPoly(2), doctest::Contains("component counts"), Error);

    CHECK(multidegree(t1, VarMatrix(1, 3)) == std::vector<int>{0});
    ThetaPoly mixed(3);
    mixed.comps[1] = xv(0, 3) + xv(0, 3, 2);
    CHECK_THROWS_WITH_AS(multidegree(mixed, VarMatrix(1, 3)),
                         doctest::Contains("not multihomogeneous"), Error);
    CHECK_THROWS_WITH_AS(multidegree(ThetaPoly(3), VarMatrix(1, 3)),
                         doctest::Contains("zero element"), Error);
}

TEST_CASE("hook determinants") {
    VarMatrix vm1(1, 1);
    CHECK(hook_det(1, 0, 0, vm1) == theta(0, 1));

    VarMatrix vm(1, 3);
    ThetaPoly d20 = hook_det(3, 2, 0, vm);
    ThetaPoly expect(3);
    expect.comps[1] = xv(2, 3) - xv(1, 3);
    expect.comps[2] = -(xv(2, 3) - xv(0, 3));
    expect.comps[3] = xv(1, 3) - xv(0, 3);
    CHECK(d20 == expect);

    CHECK_THROWS_WITH_AS(hook_det(3, 1, 2, vm), doctest::Contains("does not have size"), Error);
    CHECK_THROWS_WITH_AS(hook_det(2, -1, 2, VarMatrix(1, 2)), doctest::Contains("does not"), Error);
    CHECK_THROWS_WITH_AS(hook_det(2, 0, 1, vm), doctest::Contains("column count"), Error);

    // replacing theta_i by x_i^a reassembles the Vandermonde determinant up
    // to the sign of moving the column back into sorted position
    for (int n = 2; n <= 4; ++n) {
        VarMatrix vmn(1, n);
        for (int a = 0; a < n; ++a) {
            ThetaPoly d = hook_det(n, a, n - 1 - a, vmn);
            MPoly total;
            for (int i = 0; i < n; ++i)
                total += d.comps[static_cast<size_t>(i) + 1] * xv(i, n, a);
            CHECK(total == (a % 2 == 0 ? vandermonde(n) : -vandermonde(n)));
        }
    }

    // the derivation sum walks down the hook chain with scalar a + 1
    for (int n = 2; n <= 4; ++n) {
        VarMatrix vmn(1, n);
        for (int a = 0; a + 1 < n; ++a) {
            ThetaPoly stepped = pi_sum(hook_det(n, a, n - 1 - a, vmn), vmn);
            CHECK(stepped == hook_det(n, a + 1, n - 2 - a, vmn).scaled(Rat(a + 1)));
        }
        CHECK(pi_sum(hook_det(n, n - 1, 0, vmn), vmn).is_zero());
    }
}

TEST_CASE("diagram determinants") {
    CHECK(diagram_det({{0, 0}, {0, 1}}, 2) == yv(0, 2) - yv(1, 2));
    CHECK(diagram_det({{0, 0}, {1, 0}}, 2) == xv(1, 2) - xv(0, 2));
    CHECK(diagram_det({{0, 0}}, 1) == MPoly(Rat(1)));
    CHECK_THROWS_WITH_AS(diagram_det({{0, 0}}, 2), doctest::Contains("cells, expected"), Error);
    CHECK_THROWS_WITH_AS(diagram_det({{0, -1}, {0, 0}}, 2), doctest::Contains("nonnegative"), Error);

    CHECK(ferrers_diagram({2, 1}) == Diagram{{0, 0}, {1, 0}, {0, 1}});
    CHECK(ferrers_diagram({}) == Diagram{});

    // the hook diagram linearizes the theta determinant exactly, including
    // its sign, because both use the same column order
    for (int n = 1; n <= 4; ++n) {
        VarMatrix vmn(1, n);
        for (int a = 0; a < n; ++a) {
            Diagram d = hook_diagram(a, n - 1 - a);
            CHECK(static_cast<int>(d.size()) == n);
            CHECK(diagram_det(d, n) == linearize(hook_det(n, a, n - 1 - a, vmn), n));
        }
    }

    // d(n-1, 0) is the Ferrers shape (n-1, 1)
    for (int n = 2; n <= 5; ++n) {
        Diagram d = hook_diagram(n - 1, 0);
        Diagram f = ferrers_diagram({n - 1, 1});
        std::sort(d.begin(), d.end());
        std::sort(f.begin(), f.end());
        CHECK(d == f);
    }
    CHECK_THROWS_WITH_AS(hook_diagram(-1, 2), doctest::Contains("nonnegative"), Error);
}

TEST_CASE("derivations, polarizations, and column permutations") {
    VarMatrix vm(2, 2);
    ThetaPoly d01 = hook_det(2, 0, 1, vm); // theta_1 x_2 - theta_2 x_1
    CHECK(derive(d01, 0, 0, vm) == theta(1, 2).scaled(Rat(-1)));
    CHECK(derive(d01, 0, 1, vm) == theta(0, 2));
    CHECK(derive(d01, 1, 0, vm).is_zero());

    ThetaPoly pol = polarize(d01, 0, 1, 1, vm);
    ThetaPoly expect(2);
    expect.comps[1] = yv(1, 2);
    expect.comps[2] = -yv(0, 2);
    CHECK(pol == expect);
    CHECK(polarize(d01, 0, 1, 2, vm).is_zero());
    CHECK_THROWS_WITH_AS(polarize(d01, 0, 0, 1, vm), doctest::Contains("distinct rows"), Error);
    CHECK_THROWS_WITH_AS(polarize(d01, 0, 2, 1, vm), doctest::Contains("outside the variable matrix"), Error);
    CHECK_THROWS_WITH_AS(polarize(d01, 0, 1, 0, vm), doctest::Contains("order must be positive"), Error);
    CHECK_THROWS_WITH_AS(derive(d01, 2, 0, vm), doctest::Contains("outside the variable matrix"), Error);

    ThetaPoly swapped = sn_act(d01, {1, 0}, vm);
    CHECK(swapped == d01.scaled(Rat(-1)));
    CHECK(sn_act(pol, {1, 0}, vm) == pol.scaled(Rat(-1)));
    CHECK_THROWS_WITH_AS(sn_act(d01, {0}, vm), doctest::Contains("permutation length"), Error);
    CHECK_THROWS_WITH_AS(sn_act(d01, {0, 0}, vm), doctest::Contains("not a bijection"), Error);

    // permuting columns commutes with the operators accordingly
    VarMatrix vm3(2, 3);
    ThetaPoly d11 = hook_det(3, 1, 1, vm3);
    std::vector<int> perm = {2, 0, 1};
    for (int i = 0; i < 3; ++i)
        CHECK(sn_act(derive(d11, 0, i, vm3), perm, vm3) == derive(sn_act(d11, perm, vm3), 0, perm[static_cast<size_t>(i)], vm3));
    for (int r = 1; r <= 2; ++r)
        CHECK(sn_act(polarize(d11, 0, 1, r, vm3), perm, vm3) == polarize(sn_act(d11, perm, vm3), 0, 1, r, vm3));
}

TEST_CASE("closure saturates the smallest stable span") {
    // n = 2, one row: D = theta_1 x_2 - theta_2 x_1 plus its derivatives
    VarMatrix vm(1, 2);
    ThetaPoly d01 = hook_det(2, 0, 1, vm);
    GradedBasis gb = closure({d01}, vm, 0);
    CHECK(gb.dimension() == 3);
    CHECK(gb.hilbert() == std::map<std::vector<int>, long>{{{0}, 2}, {{1}, 1}});
    CHECK(gb.slices.at({0}).rows == std::vector<ThetaPoly>{theta(0, 2), theta(1, 2)});
    CHECK(gb.slices.at({1}).rows == std::vector<ThetaPoly>{d01});
    CHECK_FALSE(gb.higher_polarization_used);

    // n = 3, one row: the degree-0 slice is the standard representation
    VarMatrix vm3(1, 3);
    GradedBasis gb3 = closure({hook_det(3, 2, 0, vm3)}, vm3, 0);
    CHECK(gb3.hilbert() == std::map<std::vector<int>, long>{{{0}, 2}, {{1}, 1}});

    // theta-degree one everywhere: the operators never touch comps[0]
    VarMatrix vm22(2, 3);
    GradedBasis m11 = module_M(3, 1, 1, 2);
    for (const auto& [deg, slice] : m11.slices)
        for (const ThetaPoly& row : slice.rows) {
            CHECK(row.comps[0].is_zero());
            CHECK_FALSE(row.is_zero());
        }

    // closing the closure changes nothing
    std::vector<ThetaPoly> all_rows;
    for (const auto& [deg, slice] : m11.slices)
        for (const ThetaPoly& row : slice.rows) all_rows.push_back(row);
    GradedBasis again = closure(all_rows, vm22, 2);
    CHECK(again.slices == m11.slices);

    // the canonical echelon basis does not depend on the generating set
    ThetaPoly d = hook_det(3, 1, 1, vm22);
    GradedBasis from_two = closure({d.scaled(Rat(5)), derive(d, 0, 0, vm22)}, vm22, 2);
    CHECK(from_two.slices == module_M(3, 1, 1, 2).slices);

    CHECK_THROWS_WITH_AS(closure({d}, vm22, -1), doctest::Contains("nonnegative"), Error);
    ThetaPoly bad(3);
    bad.comps[1] = xv(0, 3) + MPoly(Rat(1));
    CHECK_THROWS_WITH_AS(closure({bad}, vm22, 0), doctest::Contains("not multihomogeneous"), Error);
    CHECK_THROWS_WITH_AS(closure({theta(0, 2)}, vm22, 0), doctest::Contains("theta components"), Error);
}

TEST_CASE("frobenius at one variable row") {
    // n = 1: the single theta spans the trivial representation
    CHECK(frobenius(module_M(1, 0, 0, 1)) == ts({{{}, {1}, 1}}));

    // n = 2: span{D, theta_1, theta_2}
    GradedBasis m01 = module_M(2, 0, 1, 1);
    CHECK(graded_frobenius(m01) == sf({{"1", {2}}, {"1 + q", {1, 1}}}));
    CHECK(frobenius(m01) == ts({{{}, {2}, 1}, {{}, {1, 1}, 1}, {{1}, {1, 1}, 1}}));

    // the one-row hook modules realize the dual Hall-Littlewood series
    for (int n = 2; n <= 4; ++n) {
        SymFunc H = hl_H({n - 1, 1});
        for (int a = 1; a < n; ++a) {
            int b = n - 1 - a;
            SymFunc geometric;
            for (int j = 0; j <= b; ++j) geometric += H.scaled(RatFunc(MPoly::var(0, j)));
            CHECK(graded_frobenius(module_M(n, a, b, 1)) == geometric);
        }
    }

    // at a = 0 the same formula fails: the trivial representation of the
    // generator degree survives, as the direct expansion shows
    SymFunc m02 = graded_frobenius(module_M(3, 0, 2, 1));
    CHECK(m02 == sf({{"1", {3}}, {"1 + 2*q + q^2", {2, 1}}, {"q + q^2 + q^3", {1, 1, 1}}}));
    SymFunc wrong;
    for (int j = 0; j <= 2; ++j) wrong += hl_H({2, 1}).scaled(RatFunc(MPoly::var(0, j)));
    CHECK_FALSE(m02 == wrong);
}

TEST_CASE("frobenius matches the tensor tables") {
    // M_(2|0) = S_(2|0): the sign representation polarized across two rows
    CHECK(frobenius(module_M(3, 2, 0, 2)) == ts({{{}, {2, 1}, 1}, {{1}, {1, 1, 1}, 1}}));

    CHECK(s_rho(2, 0, 1, 2) == ts({{{}, {2}, 1}, {{1}, {1, 1}, 1}}));
    CHECK(s_rho(2, 1, 0, 2) == ts({{{}, {1, 1}, 1}}));
    CHECK(s_rho(3, 1, 1, 2) == ts({{{1}, {2, 1}, 1}, {{2}, {1, 1, 1}, 1}}));
    CHECK(s_rho(3, 0, 2, 2) == ts({{{}, {3}, 1},
                                   {{1}, {2, 1}, 1},
                                   {{2}, {2, 1}, 1},
                                   {{1, 1}, {1, 1, 1}, 1},
                                   {{3}, {1, 1, 1}, 1}}));

    // three rows add nothing new at n = 3: the expansion has stabilized
    CHECK(frobenius(module_M(3, 0, 2, 3)) == frobenius(module_M(3, 0, 2, 2)));
    CHECK(s_rho(3, 0, 2, 3) == s_rho(3, 0, 2, 2));

    CHECK_THROWS_WITH_AS(module_M(3, 1, 1, 0), doctest::Contains("must be positive"), Error);
    CHECK_THROWS_WITH_AS(s_rho(3, 3, -1, 2), doctest::Contains("does not have size"), Error);

    // a span missing a permutation image is rejected
    VarMatrix vm(1, 2);
    GradedBasis broken(vm);
    broken.gens.push_back(theta(0, 2));
    broken.slices[{0}].insert(theta(0, 2));
    CHECK_THROWS_WITH_AS(graded_frobenius(broken), doctest::Contains("not stable"), Error);
}

TEST_CASE("hook modules project along the chain") {
    for (int n = 2; n <= 3; ++n)
        for (int a = 0; a + 1 < n; ++a) {
            GradedBasis upper = module_M(n, a, n - 1 - a, 2);
            GradedBasis lower = module_M(n, a + 1, n - 2 - a, 2);
            for (const auto& [deg, slice] : upper.slices)
                for (const ThetaPoly& row : slice.rows) {
                    ThetaPoly img = pi_sum(row, upper.vm);
                    if (img.is_zero()) continue;
                    auto it = lower.slices.find(multidegree(img, upper.vm));
                    REQUIRE(it != lower.slices.end());
                    CHECK(it->second.contains(img));
                }
        }
}

TEST_CASE("higher polarizations enlarge the modules") {
    // capping the polarization order at 1 loses basis elements, so the
    // higher operators genuinely matter; the smallest witness is n = 3
    VarMatrix vm(2, 3);
    ThetaPoly d = hook_det(3, 0, 2, vm);
    GradedBasis full = closure({d}, vm, 2);
    GradedBasis capped = closure({d}, vm, 1);
    CHECK(full.dimension() == 27);
    CHECK(capped.dimension() == 26);
    CHECK(full.higher_polarization_used);
    CHECK_FALSE(capped.higher_polarization_used);
}

TEST_CASE("module dimensions at two rows") {
    for (int n = 2; n <= 4; ++n) {
        long full = module_M(n, 0, n - 1, 2).dimension();
        long next = module_M(n, 1, n - 2, 2).dimension();
        long nn = 1, np = 1;
        for (int j = 0; j < n; ++j) nn *= n;
        for (int j = 0; j + 1 < n; ++j) np *= n + 1;
        CHECK(full == nn);
        CHECK(full - next == np);
    }
}

TEST_CASE("garsia haiman modules recover the macdonald polynomials") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& mu : partitions_of(n)) {
            GradedBasis gm = diagram_module(ferrers_diagram(mu));
            CHECK(gm.dimension() == factorial(n));
            CHECK(graded_frobenius(gm) == macdonald_htilde(mu));
        }
    for (const Partition& mu : std::vector<Partition>{{5}, {3, 2}, {2, 2, 1}, {1, 1, 1, 1, 1}})
        CHECK(diagram_module(ferrers_diagram(mu)).dimension() == 120);
    CHECK_THROWS_WITH_AS(diagram_module({}), doctest::Contains("at least one cell"), Error);
}

TEST_CASE("hook diagram modules slice to the theta modules") {
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a < n; ++a) {
            SymFunc G = garsia_haiman(hook_diagram(a, n - 1 - a));
            CHECK(t_degree(G) == 1);
            CHECK(t_slice(G, 1) == graded_frobenius(module_M(n, a, n - 1 - a, 1)));
        }
}

TEST_CASE("intersections and the science fiction module") {
    // intersection of the two Garsia-Haiman modules below the hook (n|1):
    // the Ferrers shapes (n-1, 1) and (n)
    for (int n = 3; n <= 4; ++n) {
        GradedBasis A = diagram_module(ferrers_diagram({n - 1, 1}));
        GradedBasis B = diagram_module(ferrers_diagram({n}));
        GradedBasis I = intersect(A, B);
        CHECK(I.dimension() == factorial(n) / 2);
        ScienceFiction split = science_fiction(n);
        CHECK(graded_frobenius(I) == split.I);
        CHECK(graded_frobenius(A) - graded_frobenius(I) == split.I_perp);
        GradedBasis same = intersect(A, A);
        CHECK(same.slices == A.slices);
    }
    GradedBasis small = diagram_module(hook_diagram(1, 1));
    GradedBasis other = diagram_module(hook_diagram(1, 2));
    CHECK_THROWS_WITH_AS(intersect(small, other), doctest::Contains("different variable matrices"), Error);
}
