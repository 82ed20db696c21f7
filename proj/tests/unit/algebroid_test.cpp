#include <random>

#include <gtest/gtest.h>

#include <eform/algebroid/calculus.hpp>
#include <eform/algebroid/poisson.hpp>

#include "oracles/form_oracle.hpp"
#include "oracles/samples.hpp"
#include "oracles/schouten_oracle.hpp"

using namespace eform;
using namespace eform::algebroid;
using samples::P;

namespace {

poly::RandomPolySpec small_spec()
{
    poly::RandomPolySpec s;
    s.max_degree = 2;
    s.max_terms = 2;
    s.coefficient_bound = 3;
    return s;
}

struct Named {
    std::string name;
    LieAlgebroidData data;
};

std::vector<Named> passing_fixtures()
{
    return {
        {"so3-action", samples::so3_action()},
        {"so3-point", samples::so3_lie_algebra()},
        {"so2-action", samples::so2_action()},
        {"tangent-r2", samples::tangent_r2()},
        {"poisson-r2", poisson_algebroid(samples::constant_pi_r2())},
        {"twisted-r3", twisted_poisson_algebroid(samples::twisted_pi_r3(), samples::twisted_h_r3())},
        {"twisted-r4", twisted_poisson_algebroid(samples::twisted_pi_r4(), samples::twisted_h_r4())},
    };
}

EForm frame_form(const LieAlgebroidData& d, Index idx)
{
    EForm out(d.vars(), d.rank(), idx.size());
    out.set(std::move(idx), Polynomial(d.vars(), 1));
    return out;
}

}  // namespace

TEST(LieAlgebroid, FixturesPass)
{
    for (const auto& f : passing_fixtures()) {
        EXPECT_TRUE(check_lie_algebroid(f.data).passed) << f.name;
        EXPECT_TRUE(check_lie_algebroid_framewise(f.data).passed) << f.name;
    }
}

TEST(LieAlgebroid, NegatedStructureConstantFails)
{
    auto d = samples::so3_action();
    d.set_structure(2, 0, 1, P(d.vars(), "-1"));
    auto q = check_lie_algebroid(d);
    EXPECT_FALSE(q.passed);
    EXPECT_FALSE(q.residuals.empty());
    EXPECT_FALSE(check_lie_algebroid_framewise(d).passed);

    auto point = samples::so3_lie_algebra();
    point.set_structure(2, 0, 1, P(point.vars(), "2"));
    // A 3-dimensional bracket with one rescaled constant is still Lie.
    EXPECT_EQ(check_lie_algebroid(point).passed, check_lie_algebroid_framewise(point).passed);
}

TEST(LieAlgebroid, QSquaredAgreesWithFramewiseUnderMutation)
{
    std::mt19937_64 rng(11);
    auto spec = small_spec();
    int failing = 0;
    for (const auto& f : passing_fixtures()) {
        for (int trial = 0; trial < 6; ++trial) {
            LieAlgebroidData d = f.data;
            std::size_t r = d.rank();
            if (trial % 2 == 0 && d.dim() > 0) {
                std::size_t a = rng() % r, i = rng() % d.dim();
                d.set_anchor(a, i, d.anchor(a, i) + poly::random_polynomial(d.vars(), spec, rng));
            } else if (r >= 2) {
                std::size_t c = rng() % r, a = rng() % r, b = (a + 1 + rng() % (r - 1)) % r;
                d.set_structure(c, a, b, d.structure(c, a, b) + poly::random_polynomial(d.vars(), spec, rng));
            }
            bool q = check_lie_algebroid(d).passed;
            EXPECT_EQ(q, check_lie_algebroid_framewise(d).passed) << f.name << " trial " << trial;
            failing += !q;
        }
    }
    EXPECT_GT(failing, 10);
}

TEST(LieAlgebroid, AlgebroidQOnGenerators)
{
    auto d = samples::so3_action();
    auto q = algebroid_q(d);
    const auto& ctx = q.context();
    EXPECT_EQ(q.image(*ctx->find("q3")).to_string(), "-q1*q2");
}

TEST(EDifferential, SquaresToZero)
{
    std::mt19937_64 rng(3);
    auto spec = small_spec();
    for (const auto& f : passing_fixtures()) {
        int cases = 0;
        for (int k = 0; cases < 50; k = (k + 1) % (f.data.rank() + 1), ++cases) {
            auto alpha = random_tensor<ETag>(f.data.vars(), f.data.rank(), k, spec, rng);
            auto dd = e_differential(e_differential(alpha, f.data), f.data);
            EXPECT_TRUE(dd.is_zero()) << f.name << ": " << alpha.to_string() << " -> " << dd.to_string();
        }
    }
}

TEST(EDifferential, TangentLiouville)
{
    auto d = samples::tangent_r2();
    EForm j(d.vars(), 2, 1);
    j.set({1}, P(d.vars(), "-x"));
    auto dj = e_differential(j, d);
    EXPECT_EQ(dj.at({0, 1}), P(d.vars(), "-1"));
    EXPECT_EQ(dj.components().size(), 1u);
}

TEST(EDifferential, TangentMatchesDeRham)
{
    std::mt19937_64 rng(5);
    auto d = tangent_algebroid({"x1", "x2", "x3"});
    for (int k = 0; k <= 3; ++k) {
        for (int t = 0; t < 10; ++t) {
            auto w = random_tensor<BaseTag>(d.vars(), 3, k, small_spec(), rng);
            EForm as_e(d.vars(), 3, k);
            for (const auto& [idx, c] : w.components())
                as_e.set(idx, c);
            auto expect = oracle::exterior_derivative(w);
            auto got = e_differential(as_e, d);
            for (const auto& idx : increasing_tuples(3, k + 1))
                EXPECT_EQ(got.at(idx), expect.at(idx));
            EXPECT_EQ(de_rham_d(w), expect);
        }
    }
}

TEST(EDifferential, ChevalleyEilenberg)
{
    auto g = samples::so3_lie_algebra();
    auto de1 = e_differential(frame_form(g, {0}), g);
    EXPECT_EQ(de1.at({1, 2}), Polynomial(g.vars(), -1));
    EXPECT_TRUE(de1.at({0, 1}).is_zero());
    EXPECT_TRUE(de1.at({0, 2}).is_zero());

    std::mt19937_64 rng(9);
    poly::RandomPolySpec spec;
    spec.max_degree = 0;
    for (int k = 0; k <= 3; ++k) {
        for (int t = 0; t < 5; ++t) {
            auto a = random_tensor<ETag>(g.vars(), 3, k, spec, rng);
            EXPECT_EQ(e_differential(a, g), oracle::chevalley_eilenberg(a, g));
        }
    }
}

TEST(InteriorProduct, FrameContraction)
{
    auto d = samples::so3_action();
    auto e12 = frame_form(d, {0, 1});
    auto got = interior_product(ESection::frame(d.vars(), 3, 0), e12);
    EXPECT_EQ(got, frame_form(d, {1}));
    EXPECT_THROW(interior_product(ESection::frame(d.vars(), 3, 0), EForm(d.vars(), 3, 0)), ShapeError);
}

TEST(InteriorProduct, OddSquare)
{
    std::mt19937_64 rng(17);
    auto d = samples::so3_action();
    for (int t = 0; t < 20; ++t) {
        auto u = random_section(d.vars(), 3, small_spec(), rng);
        auto a = random_tensor<ETag>(d.vars(), 3, 2 + t % 2, small_spec(), rng);
        EXPECT_TRUE(interior_product(u, interior_product(u, a)).is_zero());
    }
}

TEST(Calculus, CartanFormula)
{
    std::mt19937_64 rng(21);
    for (const auto& f : passing_fixtures()) {
        const auto& d = f.data;
        for (int t = 0; t < 8; ++t) {
            auto u = random_section(d.vars(), d.rank(), small_spec(), rng);
            auto v = random_section(d.vars(), d.rank(), small_spec(), rng);
            std::size_t k = 1 + t % d.rank();
            auto a = random_tensor<ETag>(d.vars(), d.rank(), k, small_spec(), rng);
            auto lhs = e_lie_derivative(u, interior_product(v, a), d) - interior_product(v, e_lie_derivative(u, a, d));
            auto rhs = interior_product(section_bracket(d, u, v), a);
            EXPECT_EQ(lhs, rhs) << f.name;
        }
    }
}

TEST(Calculus, SectionLeibniz)
{
    std::mt19937_64 rng(23);
    for (const auto& f : passing_fixtures()) {
        const auto& d = f.data;
        for (int t = 0; t < 10; ++t) {
            auto u = random_section(d.vars(), d.rank(), small_spec(), rng);
            auto v = random_section(d.vars(), d.rank(), small_spec(), rng);
            auto g = poly::random_polynomial(d.vars(), small_spec(), rng);
            auto lhs = section_bracket(d, u, g * v);
            auto rhs = g * section_bracket(d, u, v) + anchor_apply(d, u, g) * v;
            EXPECT_EQ(lhs, rhs) << f.name;
        }
    }
}

TEST(Calculus, AnchorMorphismOnRandomSections)
{
    std::mt19937_64 rng(29);
    for (const auto& f : passing_fixtures()) {
        const auto& d = f.data;
        for (int t = 0; t < 5; ++t) {
            auto u = random_section(d.vars(), d.rank(), small_spec(), rng);
            auto v = random_section(d.vars(), d.rank(), small_spec(), rng);
            EXPECT_EQ(lie_bracket(anchor_of(d, u), anchor_of(d, v)), anchor_of(d, section_bracket(d, u, v))) << f.name;
        }
    }
}

TEST(Schouten, ConstantBivector)
{
    auto pi = samples::constant_pi_r2();
    EXPECT_TRUE(schouten_bracket(pi, pi).is_zero());
}

TEST(Schouten, BivectorOnPlane)
{
    auto v = poly::make_vars({"x1", "x2"});
    MultiVector pi(v, 2, 2);
    pi.set({0, 1}, P(v, "x1"));
    auto s = schouten_bracket(pi, pi);
    EXPECT_EQ(s.arity(), 3u);
    EXPECT_TRUE(s.is_zero());
}

TEST(Schouten, VectorOnFunction)
{
    std::mt19937_64 rng(31);
    auto v = poly::make_vars({"x1", "x2", "x3"});
    for (int t = 0; t < 20; ++t) {
        auto x = random_tensor<MultiTag>(v, 3, 1, small_spec(), rng);
        auto f = poly::random_polynomial(v, small_spec(), rng);
        MultiVector fm(v, 3, 0);
        fm.set({}, f);
        Polynomial expect(v);
        for (std::size_t i = 0; i < 3; ++i)
            expect += x.at({i}) * f.partial_derivative(i);
        EXPECT_EQ(schouten_bracket(x, fm).at({}), expect);
    }
}

TEST(Schouten, VectorFieldsGiveLieBracket)
{
    std::mt19937_64 rng(37);
    auto v = poly::make_vars({"x1", "x2", "x3"});
    for (int t = 0; t < 20; ++t) {
        auto x = random_tensor<MultiTag>(v, 3, 1, small_spec(), rng);
        auto y = random_tensor<MultiTag>(v, 3, 1, small_spec(), rng);
        EXPECT_EQ(schouten_bracket(x, y), lie_bracket(x, y));
    }
}

TEST(Schouten, MatchesCombinatorialOracle)
{
    std::mt19937_64 rng(41);
    for (std::size_t dim = 1; dim <= 3; ++dim) {
        std::vector<std::string> names{"x1", "x2", "x3"};
        names.resize(dim);
        auto v = poly::make_vars(names);
        for (std::size_t a = 0; a <= 2; ++a) {
            for (std::size_t b = 0; b <= 2; ++b) {
                if (a > dim || b > dim)
                    continue;
                for (int t = 0; t < 10; ++t) {
                    auto p = random_tensor<MultiTag>(v, dim, a, small_spec(), rng);
                    auto q = random_tensor<MultiTag>(v, dim, b, small_spec(), rng);
                    EXPECT_EQ(schouten_bracket(p, q), oracle::schouten(p, q))
                        << "arity " << a << "," << b << ": " << p.to_string() << " | " << q.to_string();
                }
            }
        }
    }
}

TEST(Schouten, GradedAntisymmetryAndJacobi)
{
    std::mt19937_64 rng(43);
    auto v = poly::make_vars({"x1", "x2", "x3"});
    for (int t = 0; t < 27; ++t) {
        std::size_t a = t % 3, b = (t / 3) % 3, c = (t / 9) % 3;
        if (a + b == 0 || a + c == 0 || b + c == 0)
            continue;
        auto p = random_tensor<MultiTag>(v, 3, a, small_spec(), rng);
        auto q = random_tensor<MultiTag>(v, 3, b, small_spec(), rng);
        auto r = random_tensor<MultiTag>(v, 3, c, small_spec(), rng);
        int s = ((a + 1) * (b + 1)) % 2 ? 1 : -1;  // -(-1)^{(a-1)(b-1)}
        auto pq = schouten_bracket(p, q);
        auto qp = schouten_bracket(q, p);
        EXPECT_EQ(pq, Rational(s) * qp);
        // [P,[Q,R]] = [[P,Q],R] + (-1)^{(a-1)(b-1)} [Q,[P,R]]
        int j = ((a + 1) * (b + 1)) % 2 ? -1 : 1;
        auto lhs = schouten_bracket(p, schouten_bracket(q, r));
        auto rhs = schouten_bracket(pq, r) + Rational(j) * schouten_bracket(q, schouten_bracket(p, r));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Poisson, ConstantPlaneIsLieAlgebroid)
{
    auto d = poisson_algebroid(samples::constant_pi_r2());
    EXPECT_TRUE(check_lie_algebroid(d).passed);
    EXPECT_EQ(d.anchor(0, 1), P(d.vars(), "-1"));
    EXPECT_EQ(d.anchor(1, 0), P(d.vars(), "1"));
}

TEST(Poisson, StructureFunctionsAreMinusDerivatives)
{
    std::mt19937_64 rng(47);
    auto v = poly::make_vars({"x1", "x2"});
    for (int t = 0; t < 10; ++t) {
        MultiVector pi(v, 2, 2);
        pi.set({0, 1}, poly::random_polynomial(v, small_spec(), rng));
        auto d = poisson_algebroid(pi);
        EXPECT_TRUE(check_lie_algebroid(d).passed) << pi.to_string();
        for (std::size_t k = 0; k < 2; ++k)
            EXPECT_EQ(d.structure(k, 0, 1), -pi.at({0, 1}).partial_derivative(k));
    }
}

TEST(TwistedPoisson, Fixtures)
{
    EXPECT_TRUE(check_twisted_poisson(samples::twisted_pi_r3(), samples::twisted_h_r3()).passed);
    EXPECT_TRUE(check_twisted_poisson(samples::twisted_pi_r4(), samples::twisted_h_r4()).passed);
    EXPECT_TRUE(check_twisted_poisson(samples::constant_pi_r2(), BaseForm(samples::constant_pi_r2().vars(), 2, 3)).passed);
}

TEST(TwistedPoisson, MutationsFailBothChecks)
{
    auto pi = samples::twisted_pi_r4();
    auto h = -samples::twisted_h_r4();
    EXPECT_FALSE(check_twisted_poisson(pi, h).passed);
    EXPECT_FALSE(check_lie_algebroid(twisted_poisson_algebroid(pi, h)).passed);

    auto pi3 = samples::twisted_pi_r3();
    pi3.set({0, 2}, P(pi3.vars(), "x1"));
    auto h3 = samples::twisted_h_r3();
    EXPECT_FALSE(check_twisted_poisson(pi3, h3).passed);
    EXPECT_FALSE(check_lie_algebroid(twisted_poisson_algebroid(pi3, h3)).passed);
}

TEST(TwistedPoisson, NonClosedH)
{
    auto v = poly::make_vars({"x1", "x2", "x3", "x4"});
    BaseForm h(v, 4, 3);
    h.set({0, 1, 2}, P(v, "x4"));
    auto verdict = check_twisted_poisson(MultiVector(v, 4, 2), h);
    EXPECT_FALSE(verdict.passed);
    bool saw_dh = false;
    for (const auto& r : verdict.residuals)
        saw_dh |= r.label.rfind("dH", 0) == 0;
    EXPECT_TRUE(saw_dh);
}

TEST(TwistedPoisson, PushforwardDefinition)
{
    auto pi = samples::twisted_pi_r4();
    auto h = samples::twisted_h_r4();
    auto push = pi_pushforward(pi, h);
    // H(pi# dx^1, pi# dx^2, pi# dx^4) computed through contractions.
    auto c = contract(pi_sharp(pi, 0), h);
    auto cc = contract(pi_sharp(pi, 1), c);
    auto ccc = contract(pi_sharp(pi, 3), cc);
    EXPECT_EQ(push.at({0, 1, 3}), ccc.at({}));
}
