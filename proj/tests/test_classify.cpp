#include <random>

#include "doctest.h"

#include "bilpair/classify/classify.hpp"
#include "bilpair/exactlin/enumerate.hpp"
#include "support.hpp"

using namespace bilpair;
using testing_support::pair_text;

namespace {

BilinearPair a3(std::uint32_t p) { return pair_text(p, 2, "e1*e1 = e2"); }
BilinearPair b3(std::uint32_t p) { return pair_text(p, 2, "e1*e2 = e2\ne2*e1 = -e2"); }
BilinearPair n2(std::uint32_t p) { return BilinearPair(2, Field::prime(p)); }
BilinearPair d2_00(std::uint32_t p) { return pair_text(p, 2, "e1*e1 = e1"); }
BilinearPair b1(std::uint32_t p, int alpha) {
    // e1 e2 = (1-a) e1 + e2, e2 e1 = a e1 - e2
    return pair_text(p, 2,
                     "e1*e2 = " + std::to_string((1 - alpha + static_cast<int>(p)) % static_cast<int>(p)) +
                         "*e1 + e2\ne2*e1 = " + std::to_string(alpha) + "*e1 - e2");
}

std::vector<BilinearPair> sample_bases(std::uint32_t p) {
    return {a3(p),
            b3(p),
            n2(p),
            d2_00(p),
            b1(p, 1),
            pair_text(p, 2, "e1*e1 = e2\ne1*e2 = e2\ne2*e1 = -e2"),
            pair_text(p, 2, "e1*e1 = e1 + e2\ne1*e2 = 2*e2\ne2*e1 = -e2"),
            pair_text(p, 2, "e1*e2 = e1")};
}

// Number of brute-force equivalence classes in a list.
std::size_t class_count(const std::vector<BilinearPair>& pairs) {
    std::vector<BilinearPair> reps;
    for (const auto& x : pairs) {
        bool seen = false;
        for (const auto& r : reps)
            if (are_equivalent_bruteforce(r, x).has_value()) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(x);
    }
    return reps.size();
}

std::vector<BilinearPair> ts_extensions(const BilinearPair& base, std::size_t s) {
    std::vector<BilinearPair> out;
    for (const auto& e : enumerate_ts(base, s)) out.push_back(build_extension(base, e.certificate));
    return out;
}

}  // namespace

TEST_SUITE("classify") {
    TEST_CASE("T_s enumeration") {
        CHECK(enumerate_ts(a3(2), 1).size() == 7);
        CHECK(enumerate_ts(a3(3), 3).size() == 1);
        CHECK(enumerate_ts(d2_00(2), 1).size() == gaussian_binomial(3, 1, 2));
        CHECK(enumerate_ts(d2_00(3), 2).size() == gaussian_binomial(3, 2, 3));
        CHECK(enumerate_ts(n2(3), 4).size() == 1);
        // N2: a single form passes unless its left and right kernels meet:
        // 24 invertible classes plus 12 rank-one forms a(x)b(y) with a, b independent.
        CHECK(enumerate_ts(n2(3), 1).size() == 24 + 12);
        CHECK_THROWS_AS((void)enumerate_ts(a3(2), 0), Error);
        CHECK_THROWS_AS((void)enumerate_ts(a3(2), 4), Error);
        for (const auto& e : enumerate_ts(n2(2), 2)) {
            CHECK(subspace_intersect(radical(n2(2)), form_radical(e.certificate, Field::prime(2))).dim() == 0);
            CHECK(e.s == 2);
        }
    }

    TEST_CASE("orbit partitions are partitions") {
        for (std::uint32_t p : {2u, 3u})
            for (const auto& base : sample_bases(p)) {
                AutomorphismGroup aut = automorphism_group(base);
                std::size_t h = cohomology(base).h2_dim;
                for (std::size_t s = 1; s <= h; ++s) {
                    OrbitReport r = orbit_partition(base, s, aut);
                    std::size_t sum = 0;
                    for (const auto& o : r.orbits) sum += o.size;
                    CHECK(sum == r.total);
                    CHECK(r.total == enumerate_ts(base, s).size());
                    for (std::size_t i = 1; i < r.orbits.size(); ++i)
                        CHECK(r.orbits[i - 1].representative.subspace.basis() <
                              r.orbits[i].representative.subspace.basis());
                }
            }
    }

    TEST_CASE("trivial automorphism group gives singleton orbits") {
        BilinearPair b = b1(3, 1);
        AutomorphismGroup aut = automorphism_group(b);
        REQUIRE(aut.order() == 1);
        for (std::size_t s = 1; s <= cohomology(b).h2_dim; ++s) {
            OrbitReport r = orbit_partition(b, s, aut);
            CHECK(r.orbits.size() == r.total);
        }
    }

    TEST_CASE("N2 over F2 with s = 4 is one orbit") {
        OrbitReport r = orbit_partition(n2(2), 4, automorphism_group(n2(2)));
        CHECK(r.orbits.size() == 1);
        CHECK(r.total == 1);
    }

    TEST_CASE("orbits correspond to equivalence classes of extensions") {
        for (std::uint32_t p : {2u, 3u})
            for (const auto& base : sample_bases(p)) {
                AutomorphismGroup aut = automorphism_group(base);
                std::size_t h = cohomology(base).h2_dim;
                for (std::size_t s = 1; s <= std::min<std::size_t>(h, p == 2 ? 3 : 2); ++s) {
                    if (!within_budget(2 + s, p)) continue;
                    OrbitReport r = orbit_partition(base, s, aut);
                    CHECK(r.orbits.size() == class_count(ts_extensions(base, s)));
                }
            }
    }

    TEST_CASE("orbit counts survive a change of basis and passing to the opposite") {
        std::mt19937_64 rng(31);
        for (std::uint32_t p : {2u, 3u})
            for (const auto& base : sample_bases(p)) {
                Matrix phi = testing_support::random_invertible(2, Field::prime(p), rng);
                BilinearPair moved = apply_change_of_basis(base, phi);
                BilinearPair op = opposite(base);
                AutomorphismGroup a0 = automorphism_group(base), a1 = automorphism_group(moved),
                                  a2 = automorphism_group(op);
                std::size_t h = cohomology(base).h2_dim;
                for (std::size_t s = 1; s <= h; ++s) {
                    std::size_t c0 = orbit_partition(base, s, a0).orbits.size();
                    CHECK(c0 == orbit_partition(moved, s, a1).orbits.size());
                    CHECK(c0 == orbit_partition(op, s, a2).orbits.size());
                }
            }
    }

    TEST_CASE("serial and parallel partitions agree") {
        ClassifyOptions serial;
        serial.mode = ExecMode::serial;
        for (const auto& base : sample_bases(3)) {
            AutomorphismGroup aut = automorphism_group(base);
            for (std::size_t s = 1; s <= cohomology(base).h2_dim; ++s) {
                OrbitReport x = orbit_partition(base, s, aut, serial);
                OrbitReport y = orbit_partition(base, s, aut);
                REQUIRE(x.orbits.size() == y.orbits.size());
                for (std::size_t i = 0; i < x.orbits.size(); ++i) {
                    CHECK(x.orbits[i].size == y.orbits[i].size);
                    CHECK(x.orbits[i].representative.subspace == y.orbits[i].representative.subspace);
                }
            }
        }
    }

    TEST_CASE("representatives") {
        std::vector<BilinearPair> reps = representatives(a3(2), 1);
        std::vector<BilinearPair> listed = {pair_text(2, 3, "e1*e1 = e2\ne2*e2 = e3"),
                                            pair_text(2, 3, "e1*e1 = e2\ne2*e1 = e3\ne2*e2 = e3"),
                                            pair_text(2, 3, "e1*e1 = e2\ne2*e1 = e3"),
                                            pair_text(2, 3, "e1*e1 = e2\ne1*e2 = e3"),
                                            pair_text(2, 3, "e1*e1 = e2\ne1*e2 = e3\ne2*e1 = e3")};
        for (const auto& l : listed) {
            std::size_t hits = 0;
            for (const auto& r : reps) hits += are_equivalent_bruteforce(l, r).has_value();
            CHECK(hits == 1);
        }
        CHECK(reps.size() == listed.size());
        CHECK_THROWS_AS((void)representatives(a3(2), 0), Error);
        for (const auto& r : representatives(n2(2), 2)) {
            CHECK(radical(r).dim() == 2);
            CHECK_FALSE(has_radical_component_bruteforce(r));
        }
    }

    TEST_CASE("classification in codimension two") {
        std::vector<std::pair<std::string, BilinearPair>> bases = {{"A3", a3(2)}, {"N2", n2(2)}, {"B3", b3(2)}};
        ClassificationReport r = classify_codim2(bases, 3);
        std::vector<BilinearPair> candidates;
        for (const auto& [name, base] : bases) {
            if (radical(base).dim() == 0) candidates.push_back(add_radical_components(base, 1));
            for (const auto& x : ts_extensions(base, 1)) candidates.push_back(x);
        }
        CHECK(r.pairs.size() == class_count(candidates));
        std::size_t per_base = 0;
        for (const auto& [name, count] : r.per_base) per_base += count;
        CHECK(per_base == r.pairs.size());
        for (const auto& c : r.pairs) CHECK(radical(c.pair).dim() == 1);

        ClassificationReport big = classify_codim2(bases, 9);
        CHECK(big.pairs.empty());
        REQUIRE(big.diagnostics.size() == 1);
        CHECK(big.diagnostics[0].find("every such pair has ≥ 3 radical components") != std::string::npos);
    }

    TEST_CASE("N2 in dimension six") {
        ClassificationReport r = classify_codim2({{"N2", n2(2)}}, 6);
        std::vector<BilinearPair> cores;
        for (const auto& c : r.pairs)
            if (c.components == 0) cores.push_back(c.pair);
        REQUIRE(cores.size() == 1);
        BilinearPair a134 = pair_text(2, 6, "e1*e1 = e3\ne1*e2 = e4\ne2*e1 = e5\ne2*e2 = e6");
        CHECK(are_equivalent_bruteforce(cores[0], a134).has_value());
        for (const auto& c : r.pairs) CHECK(radical(c.pair).dim() == 4);
    }

    TEST_CASE("TSV output") {
        OrbitReport r = orbit_partition(a3(2), 1, automorphism_group(a3(2)));
        std::string tsv = orbit_report_tsv(r, "A3");
        CHECK(tsv.rfind("base\ts\torbit_index\torbit_size\trepresentative_subspace_rref\n", 0) == 0);
        CHECK(std::count(tsv.begin(), tsv.end(), '\n') == static_cast<long>(r.orbits.size() + 1));
        CHECK(tsv.find("A3\t1\t0\t") != std::string::npos);
    }
}
