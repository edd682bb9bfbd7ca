#include <set>

#include "doctest.h"

#include "bilpair/catalog/verify.hpp"
#include "bilpair/cohom/cohomology.hpp"
#include "support.hpp"

using namespace bilpair;
using testing_support::pair_text;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

Assignment at(std::uint32_t p, std::initializer_list<std::pair<const char*, long long>> vals) {
    Assignment a;
    for (const auto& [k, v] : vals) a[k] = Scalar::from_int(Field::prime(p), v);
    return a;
}

}  // namespace

TEST_SUITE("catalog") {
    TEST_CASE("expressions") {
        Field f7 = Field::prime(7);
        Expression e = Expression::parse("(1-alpha)*e1 + beta/gamma*e2 - e3");
        Vector v = e.vector(f7, at(7, {{"alpha", 3}, {"beta", 1}, {"gamma", 2}}), 3);
        CHECK(v[0] == Scalar::from_int(f7, -2));
        CHECK(v[1] == Scalar::from_int(f7, 4));
        CHECK(v[2] == Scalar::from_int(f7, -1));
        CHECK(Expression::parse("1/2*e1 + 1/6*e2").excluded_characteristics() == std::vector<std::uint32_t>{2, 3});
        CHECK(e.excluded_characteristics().empty());
        CHECK(Expression::parse("-(2*alpha-1)").scalar(f7, at(7, {{"alpha", 1}})) == Scalar::from_int(f7, -1));
        Vector d = Expression::parse("D11 + alpha*D21").vector(f7, at(7, {{"alpha", 5}}), 2, true);
        CHECK(d[0].is_one());
        CHECK(d[2] == Scalar::from_int(f7, 5));
        CHECK(Expression::parse("0").vector(f7, {}, 2, true) == zero_vector(f7, 4));
        CHECK_THROWS_AS((void)Expression::parse("e1 +"), Error);
        CHECK_THROWS_AS((void)Expression::parse("(e1"), Error);
        CHECK_THROWS_AS((void)Expression::parse("e1*e2").vector(f7, {}, 2), Error);
        CHECK_THROWS_AS((void)Expression::parse("e4").vector(f7, {}, 3), Error);
        CHECK_THROWS_AS((void)Expression::parse("alpha").scalar(f7, {}), Error);
        Inequation q = Inequation::parse("gamma != beta or delta != alpha");
        CHECK(q.holds(f7, at(7, {{"alpha", 1}, {"beta", 2}, {"gamma", 3}, {"delta", 1}})));
        CHECK_FALSE(q.holds(f7, at(7, {{"alpha", 1}, {"beta", 2}, {"gamma", 2}, {"delta", 1}})));
    }

    TEST_CASE("table sizes and shapes") {
        CHECK(cat().table(1).size() == 68);
        CHECK(cat().table(2).size() == 53);
        CHECK(cat().table(3).size() == 12);
        CHECK(cat().table(4).size() == 17);
        REQUIRE(cat().table(0).size() == 1);
        CHECK(cat().table(0)[0]->id == "A_134");
        const std::size_t dims[] = {6, 3, 4, 5, 2};
        std::set<std::string> ids;
        for (int t = 0; t <= 4; ++t)
            for (const auto* e : cat().table(t)) {
                CHECK(e->dim == dims[t]);
                ids.insert(e->id);
                if (t != 4) {
                    REQUIRE(e->base);
                    CHECK(cat().entry(e->base->id).table == 4);
                }
            }
        // Ids A_01 .. A_134 are all present.
        for (int k = 1; k <= 134; ++k) {
            std::string id = std::string("A_") + (k < 10 ? "0" : "") + std::to_string(k);
            CHECK_MESSAGE(ids.count(id) == 1, id);
        }
        CHECK(cat().fixtures().size() == 21);
    }

    TEST_CASE("instantiate") {
        Field f7 = Field::prime(7);
        CHECK(instantiate("A_08", {}, f7) == pair_text(7, 3, "e1*e1 = e2\ne2*e2 = e3"));
        CHECK(instantiate("A_04", at(7, {{"lambda", 2}}), f7) ==
              pair_text(7, 3, "e1*e1 = e1 + e2\ne1*e2 = 4*e2\ne2*e1 = 4*e2 + 2*e3\ne2*e2 = e3"));
        CHECK(instantiate("A_134", {}, Field::prime(5)) ==
              pair_text(5, 6, "e1*e1 = e3\ne1*e2 = e4\ne2*e1 = e5\ne2*e2 = e6"));

        auto code = [](auto&& f) {
            try {
                f();
            } catch (const Error& e) {
                return e.code();
            }
            return ErrorCode::invalid_input;
        };
        CHECK(code([] { (void)instantiate("A_04", at(2, {{"lambda", 1}}), Field::prime(2)); }) ==
              ErrorCode::characteristic_excluded);
        CHECK(code([] { (void)instantiate("A_999", {}, Field::prime(7)); }) == ErrorCode::unknown_id);
        CHECK(code([] { (void)instantiate("A_01", at(7, {{"alpha", 0}}), Field::prime(7)); }) ==
              ErrorCode::constraint_violation);
        // Constraint inherited from the base family (alpha + beta != 1).
        CHECK(code([] { (void)instantiate("A_42", at(7, {{"alpha", 3}, {"beta", 5}}), Field::prime(7)); }) ==
              ErrorCode::constraint_violation);
        CHECK(code([] { (void)instantiate("A_58", at(7, {{"alpha", 1}, {"beta", 1}, {"gamma", 0}}), Field::prime(7)); }) ==
              ErrorCode::constraint_violation);
        // -1 = 1 in characteristic 2 and the base needs gamma != 1.
        CHECK(code([] { (void)instantiate("A_60", at(2, {{"alpha", 0}, {"lambda", 1}}), Field::prime(2)); }) ==
              ErrorCode::constraint_violation);
        CHECK(code([] { (void)instantiate("A_08", at(7, {{"lambda", 1}}), Field::prime(7)); }) == ErrorCode::invalid_input);
        CHECK(code([] { (void)instantiate("A_11", {}, Field::prime(7)); }) == ErrorCode::invalid_input);

        CHECK(cat().entry("A_04").char_exclusions == std::vector<std::uint32_t>{2});
        CHECK(cat().entry("A_37").char_exclusions == std::vector<std::uint32_t>{2});
        CHECK(cat().entry("A_03").char_exclusions.empty());
        // Over the rationals nothing is excluded.
        CHECK(instantiate("A_65", {}, Field::rationals()).dim() == 3);
    }

    TEST_CASE("parameter sampling") {
        Field f7 = Field::prime(7);
        const CatalogEntry& e = cat().entry("A_54");
        auto a = sample_assignments(cat(), e, f7, 5, 11);
        auto b = sample_assignments(cat(), e, f7, 5, 11);
        REQUIRE(a.size() == 5);
        CHECK(a == b);
        std::set<std::string> seen;
        for (const auto& v : a) {
            CHECK(is_admissible(cat(), e, v, f7));
            seen.insert(assignment_text(e.params, v));
        }
        CHECK(seen.size() == 5);
        CHECK(sample_assignments(cat(), cat().entry("A_08"), f7, 3, 1).size() == 1);
        CHECK(sample_assignments(cat(), cat().entry("A_04"), Field::prime(2), 3, 1).empty());
        // The sweep starts at the origin when it is admissible.
        auto s = sample_assignments(cat(), cat().entry("A_16"), f7, 1, 1);
        REQUIRE(s.size() == 1);
        CHECK(s[0].at("alpha").is_zero());
    }

    TEST_CASE("verify_entry") {
        EntryReport r = verify_entry(cat(), "A_08", Field::prime(7), 1, 1);
        REQUIRE(r.samples.size() == 1);
        CHECK(r.passed());
        EntryReport big = verify_entry(cat(), "A_134", Field::prime(5), 1, 1);
        REQUIRE(big.samples.size() == 1);
        CHECK(big.samples[0].radical_dim == 4);
        CHECK(big.passed());
        CHECK(verify_entry(cat(), "A_04", Field::prime(2), 3, 1).skipped.find("excluded") != std::string::npos);

        // Sensitivity control: an edited coefficient must be caught.
        Catalog tampered = cat();
        CatalogEntry e = tampered.entry("A_08");
        e.products.push_back({2, 0, Expression::parse("e1")});  // e3*e1 = e1
        tampered.replace(e);
        EntryReport bad = verify_entry(tampered, "A_08", Field::prime(7), 1, 1);
        REQUIRE(bad.samples.size() == 1);
        CHECK_FALSE(bad.samples[0].radical_ok);
        CHECK_FALSE(bad.passed());

        // Wrong base reference: radical is fine, base recovery is not.
        Catalog wrong = cat();
        CatalogEntry w = wrong.entry("A_26");
        w.base->id = "A2";
        wrong.replace(w);
        EntryReport wb = verify_entry(wrong, "A_26", Field::prime(5), 1, 1);
        CHECK(wb.samples[0].radical_ok);
        CHECK_FALSE(wb.samples[0].base_ok);
    }

    TEST_CASE("Tables 1-3 recover their bases over F5 and F7") {
        for (std::uint32_t p : {5u, 7u})
            for (int t : {1, 2, 3, 0})
                for (const auto* e : cat().table(t)) {
                    EntryReport r = verify_entry(cat(), e->id, Field::prime(p), 3, 7);
                    CHECK_MESSAGE(!r.samples.empty(), e->id << " " << r.skipped);
                    CHECK_MESSAGE(r.passed(), entry_reports_tsv({r}));
                }
    }

    TEST_CASE("fixtures") {
        FixtureReport a2 = verify_fixture(cat(), "A2", Field::prime(7), 1, 1);
        CHECK(a2.passed());
        REQUIRE(a2.checks.size() == 3);
        CHECK(a2.checks[0].what == "coboundary");

        for (const auto& fx : cat().fixtures()) {
            FixtureReport r = verify_fixture(cat(), fx.id, Field::prime(7), 3, 5);
            CHECK_MESSAGE(r.skipped.empty(), fx.id);
            CHECK_MESSAGE(r.passed(), fixture_reports_tsv({r}));
        }

        // A3 orbits over F3: every computed orbit is hit, and the lambda family
        // splits into its own orbits.
        FixtureReport a3 = verify_fixture(cat(), "A3", Field::prime(3), 1, 1);
        CHECK(a3.passed());
        bool saw_orbits = false;
        for (const auto& c : a3.checks) saw_orbits |= c.what == "orbits s=1";
        CHECK(saw_orbits);

        // A stated coboundary that is wrong is reported.
        Catalog edited = cat();
        std::string text = "case X\nbase A2\ncoboundary D11 + D12 + D21\nh2dim 3\nend\n";
        edited.add_text(text);
        FixtureReport x = verify_fixture(edited, "X", Field::prime(7), 1, 1);
        CHECK_FALSE(x.passed());
    }

    TEST_CASE("distinctness audit") {
        // Parameter-free rows of Table 1 are pairwise inequivalent over F5.
        AuditReport r = distinctness_audit(cat(), 1, Field::prime(5), 1, 1);
        CHECK(r.instances.size() >= 68);
        std::size_t fixed = 0;
        for (const auto& x : r.instances) fixed += cat().entry(x.id).params.empty();
        CHECK(fixed == 16);
        for (const auto& c : r.collisions) {
            bool both_fixed = cat().entry(r.instances[c.a].id).params.empty() &&
                              cat().entry(r.instances[c.b].id).params.empty();
            CHECK_MESSAGE(!both_fixed, r.instances[c.a].id << " ~ " << r.instances[c.b].id);
        }

        Field f5 = Field::prime(5);
        BilinearPair a10 = instantiate("A_10", {}, f5);
        BilinearPair a11 = instantiate("A_11", at(5, {{"lambda", 0}}), f5);
        CHECK(a10 == opposite(a11));
        CHECK_FALSE(are_equivalent_bruteforce(a10, a11).has_value());
        auto self = are_equivalent_bruteforce(a10, a10);
        REQUIRE(self.has_value());
        CHECK(*self == Matrix::identity(3, f5));

        CHECK_THROWS_AS((void)distinctness_audit(cat(), 2, Field::prime(7), 1, 1), Error);
        // An unused parameter makes instances of A_94 coincide.
        AuditReport t2 = distinctness_audit(cat(), 2, Field::prime(2), 2, 1);
        bool within = false;
        for (const auto& c : t2.collisions) within |= c.same_family;
        CHECK(within);
        CHECK(audit_report_tsv(t2).rfind("table\tfield\tfirst", 0) == 0);
    }
}
