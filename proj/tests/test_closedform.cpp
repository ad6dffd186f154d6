#include <doctest.h>

#include "trimult/closedform.hpp"

using namespace trimult;

namespace {

const MultiplierParams& table_entry(long k) {
    static const std::vector<MultiplierParams> table = known_params_table();
    for (const MultiplierParams& p : table)
        if (p.k == k) return p;
    throw std::out_of_range("no table entry");
}

void check_form(const ResidueForm& f, long pn, long pd, long qn, long qd) {
    CHECK(f.a.p == make_rational(pn, pd));
    CHECK(f.a.q == make_rational(qn, qd));
}

}  // namespace

TEST_CASE("particular constants match the worked cases exactly") {
    CHECK(particular_constant(table_entry(2), SequenceKind::TIndex) == make_rational(-1, 2));
    CHECK(particular_constant(table_entry(2), SequenceKind::XiIndex) == make_rational(-1, 2));
    CHECK(particular_constant(table_entry(2), SequenceKind::TValue) == make_rational(-3, 32));
    CHECK(particular_constant(table_entry(2), SequenceKind::XiValue) == make_rational(-3, 16));
    CHECK(particular_constant(table_entry(3), SequenceKind::TValue) == make_rational(-1, 12));
    CHECK(particular_constant(table_entry(3), SequenceKind::XiValue) == make_rational(-1, 4));
    CHECK(particular_constant(table_entry(8), SequenceKind::TValue) == make_rational(-9, 128));
    CHECK(particular_constant(table_entry(8), SequenceKind::XiValue) == make_rational(-9, 16));
}

TEST_CASE("each particular constant satisfies its recurrence identically") {
    for (const MultiplierParams& p : known_params_table())
        for (SequenceKind kind : kAllSequenceKinds)
            CHECK(particular_identity_holds(p, kind));
}

TEST_CASE("residue coefficients reproduce the published closed forms") {
    // k=2, t: A = (2+sqrt2)/8
    auto f2t = build_residue_forms(table_entry(2), SequenceKind::TIndex);
    REQUIRE(f2t.size() == 1);
    check_form(f2t[0], 1, 4, 1, 8);
    CHECK(f2t[0].unit == QuadElem(make_rational(3), make_rational(2), BigInt(2)));

    // k=2, T_t: (3+2*sqrt2)/64 on unit theta^2 = 17+12*sqrt2
    auto f2tt = build_residue_forms(table_entry(2), SequenceKind::TValue);
    check_form(f2tt[0], 3, 64, 1, 32);
    CHECK(f2tt[0].unit == QuadElem(make_rational(17), make_rational(12), BigInt(2)));

    // k=2, xi: (1+sqrt2)/4; k=2, T_xi: (3+2*sqrt2)/32
    check_form(build_residue_forms(table_entry(2), SequenceKind::XiIndex)[0], 1, 4, 1, 4);
    check_form(build_residue_forms(table_entry(2), SequenceKind::XiValue)[0], 3, 32, 1, 16);

    // k=3: t (3+sqrt3)/12, xi (1+sqrt3)/4, T_t (2+sqrt3)/48, T_xi (2+sqrt3)/16
    check_form(build_residue_forms(table_entry(3), SequenceKind::TIndex)[0], 1, 4, 1, 12);
    check_form(build_residue_forms(table_entry(3), SequenceKind::XiIndex)[0], 1, 4, 1, 4);
    check_form(build_residue_forms(table_entry(3), SequenceKind::TValue)[0], 1, 24, 1, 48);
    check_form(build_residue_forms(table_entry(3), SequenceKind::XiValue)[0], 1, 8, 1, 16);

    // k=5, t: even residue (5+sqrt5)/20, odd residue (25+11*sqrt5)/20
    auto f5t = build_residue_forms(table_entry(5), SequenceKind::TIndex);
    REQUIRE(f5t.size() == 2);
    check_form(f5t[0], 1, 4, 1, 20);
    check_form(f5t[1], 5, 4, 11, 20);
    CHECK(f5t[0].unit == QuadElem(make_rational(9), make_rational(4), BigInt(5)));

    // k=8, t: even (4+sqrt2)/16, odd (44+31*sqrt2)/16
    auto f8t = build_residue_forms(table_entry(8), SequenceKind::TIndex);
    check_form(f8t[0], 1, 4, 1, 16);
    check_form(f8t[1], 11, 4, 31, 16);
    // k=8, xi: even (1+2*sqrt2)/4, odd (31+22*sqrt2)/4
    auto f8xi = build_residue_forms(table_entry(8), SequenceKind::XiIndex);
    check_form(f8xi[0], 1, 4, 1, 2);
    check_form(f8xi[1], 31, 4, 11, 2);
    // k=8, T_xi: even (9+4*sqrt2)/32, odd (1929+1364*sqrt2)/32 on theta^2
    auto f8txi = build_residue_forms(table_entry(8), SequenceKind::XiValue);
    check_form(f8txi[0], 9, 32, 1, 8);
    check_form(f8txi[1], 1929, 32, 341, 8);
    CHECK(f8txi[0].unit == QuadElem(make_rational(577), make_rational(408), BigInt(2)));
}

TEST_CASE("eval_at spot values") {
    auto f2t = build_residue_forms(table_entry(2), SequenceKind::TIndex);
    CHECK(eval_at(f2t, 1) == 2);
    CHECK(eval_at(f2t, 2) == 14);
    auto f2tt = build_residue_forms(table_entry(2), SequenceKind::TValue);
    CHECK(eval_at(f2tt, 1) == 3);
    auto f5t = build_residue_forms(table_entry(5), SequenceKind::TIndex);
    CHECK(eval_at(f5t, 4) == 116);
    auto f8xi = build_residue_forms(table_entry(8), SequenceKind::XiIndex);
    CHECK(eval_at(f8xi, 2) == term_at(build_spec(table_entry(8), SequenceKind::XiIndex), 2));
}

TEST_CASE("closed form equals the recurrence for n <= 200, all kinds, all k") {
    for (const MultiplierParams& p : known_params_table()) {
        for (SequenceKind kind : kAllSequenceKinds) {
            auto forms = build_residue_forms(p, kind);
            auto terms = generate(build_spec(p, kind), 201);
            for (std::uint64_t n = 0; n <= 200; ++n) CHECK(eval_at(forms, n) == terms[n]);
        }
    }
}

TEST_CASE("the multiple identity holds at the closed-form level") {
    for (const MultiplierParams& p : known_params_table()) {
        auto tt = build_residue_forms(p, SequenceKind::TValue);
        auto txi = build_residue_forms(p, SequenceKind::XiValue);
        for (std::uint64_t n = 0; n <= 200; ++n)
            CHECK(eval_at(txi, n) == p.k * eval_at(tt, n));
    }
}

TEST_CASE("trig-form constants: rank 1 closed forms") {
    TrigFormConstants c3 = trig_form_constants(table_entry(3));
    REQUIRE(c3.constants.size() == 2);
    const BigFloat tol = BigFloat::pow2(-200, 256);
    // A = (3+sqrt3)/12, B = (3-sqrt3)/12
    BigFloat sqrt3 = BigFloat(3L, 256).sqrt();
    BigFloat twelve(12L, 256);
    CHECK((c3.constants[0].second - (BigFloat(3L, 256) + sqrt3) / twelve).abs() < tol);
    CHECK((c3.constants[1].second - (BigFloat(3L, 256) - sqrt3) / twelve).abs() < tol);
    CHECK((c3.alpha * c3.beta - BigFloat(1L, 256)).abs() < tol);
}

TEST_CASE("trig-form constants reproduce seed terms for k=5") {
    MultiplierParams p5 = table_entry(5);
    TrigFormConstants c5 = trig_form_constants(p5);
    REQUIRE(c5.constants.size() == 4);
    for (std::uint64_t n = 0; n < 4; ++n) {
        auto rounded = round_with_guard(reconstruct_via_trig(c5, n));
        REQUIRE(rounded.has_value());
        CHECK(*rounded == p5.seeds[n]);
    }
}

TEST_CASE("rank-4 constants track the exact engine to 1e-30 for n <= 12") {
    MultiplierParams p13 = table_entry(13);
    TrigFormConstants c13 = trig_form_constants(p13);
    REQUIRE(c13.constants.size() == 8);
    auto forms = build_residue_forms(p13, SequenceKind::TIndex);
    BigFloat bound = BigFloat(1L, 256) / BigFloat(BigInt("1000000000000000000000000000000"), 256);
    for (std::uint64_t n = 0; n <= 12; ++n) {
        BigFloat recon = reconstruct_via_trig(c13, n);
        BigFloat exact(eval_at(forms, n), 256);
        CHECK((recon - exact).abs() < bound);
    }
}

TEST_CASE("trig reconstruction rounds to the exact terms for n <= 50") {
    for (const MultiplierParams& p : known_params_table()) {
        TrigFormConstants c = trig_form_constants(p);
        auto forms = build_residue_forms(p, SequenceKind::TIndex);
        for (std::uint64_t n = 0; n <= 50; ++n) {
            auto rounded = round_with_guard(reconstruct_via_trig(c, n));
            REQUIRE(rounded.has_value());
            CHECK(*rounded == eval_at(forms, n));
        }
    }
}

TEST_CASE("reconstruction spot checks") {
    TrigFormConstants c10 = trig_form_constants(table_entry(10));
    CHECK(round_with_guard(reconstruct_via_trig(c10, 4)) == BigInt(55));
    TrigFormConstants c13 = trig_form_constants(table_entry(13));
    CHECK(round_with_guard(reconstruct_via_trig(c13, 4)) == BigInt(414));
    CHECK(round_with_guard(reconstruct_via_trig(c13, 0)) == BigInt(0));
}

TEST_CASE("trig-form constants reject unsupported ranks") {
    MultiplierParams fake = table_entry(13);
    fake.rank = 5;
    CHECK_THROWS_AS(trig_form_constants(fake), std::domain_error);
}

TEST_CASE("characteristic roots satisfy the characteristic equation") {
    const BigFloat tight = BigFloat::pow2(-200, 256);
    RootCheckReport r2 = char_poly_root_check(table_entry(2));
    CHECK(r2.root_count == 2);
    CHECK(r2.max_residual < tight);
    CHECK(r2.product_error < tight);

    RootCheckReport r10 = char_poly_root_check(table_entry(10));
    CHECK(r10.root_count == 6);
    CHECK(r10.max_residual < BigFloat::pow2(-180, 256));
    CHECK(r10.product_error < BigFloat::pow2(-180, 256));
}

TEST_CASE("round_with_guard is loud about precision exhaustion") {
    BigFloat close = BigFloat(7L, 256) + BigFloat::pow2(-40, 256);
    CHECK(round_with_guard(close) == BigInt(7));
    BigFloat off = BigFloat(7L, 256) + BigFloat(2L, 256) / BigFloat(5L, 256);
    CHECK_FALSE(round_with_guard(off).has_value());
}

TEST_CASE("evaluation at n = 1e5 stays within the multiplication budget") {
    auto forms = build_residue_forms(table_entry(2), SequenceKind::TIndex);
    reset_quad_mul_count();
    BigInt closed = eval_at(forms, 100000);
    const std::uint64_t muls = quad_mul_count();
    CHECK(muls <= 2 * 17 + 4);  // 2*ceil(log2 1e5) + 4
    CHECK(closed == term_at(build_spec(table_entry(2), SequenceKind::TIndex), 100000));
}

TEST_CASE("residue forms serialize and come back") {
    auto forms = build_residue_forms(table_entry(5), SequenceKind::TValue);
    nlohmann::json j = residue_forms_to_json(forms);
    REQUIRE(j.size() == 2);
    CHECK(j[0]["kind"] == "Tt");
    CHECK(j[0]["D"] == "5");
    auto back = residue_forms_from_json(j);
    REQUIRE(back.size() == forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        CHECK(back[i].a == forms[i].a);
        CHECK(back[i].unit == forms[i].unit);
        CHECK(back[i].particular == forms[i].particular);
        CHECK(back[i].residue == forms[i].residue);
        CHECK(back[i].kind == forms[i].kind);
    }
}
